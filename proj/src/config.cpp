#include "fcaim/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>

namespace fcaim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto comma = v.find(',', start);
        std::string item = trim(v.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (item.empty()) throw input_error("empty list item in '" + v + "'");
        out.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

double to_double(const std::string& v) {
    char* end = nullptr;
    errno = 0;
    double d = std::strtod(v.c_str(), &end);
    if (v.empty() || *end != '\0' || errno == ERANGE) throw input_error("expected a number, got '" + v + "'");
    return d;
}

unsigned long to_unsigned(const std::string& v) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("expected a non-negative integer, got '" + v + "'");
    errno = 0;
    unsigned long u = std::strtoul(v.c_str(), nullptr, 10);
    if (errno == ERANGE) throw input_error("integer out of range: '" + v + "'");
    return u;
}

std::vector<double> to_doubles(const std::string& v) {
    std::vector<double> out;
    for (const auto& item : split_list(v)) out.push_back(to_double(item));
    return out;
}

using Setter = std::function<void(PipelineConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table{
        {"catalog", [](PipelineConfig& c, const std::string& v) { c.catalog = v; }},
        {"reference", [](PipelineConfig& c, const std::string& v) { c.reference = v; }},
        {"out", [](PipelineConfig& c, const std::string& v) { c.out = v; }},
        {"k", [](PipelineConfig& c, const std::string& v) { c.k = to_unsigned(v); }},
        {"seed", [](PipelineConfig& c, const std::string& v) { c.seed = to_unsigned(v); }},
        {"kmeans.max_iterations", [](PipelineConfig& c, const std::string& v) { c.max_iterations = to_unsigned(v); }},
        {"exclude", [](PipelineConfig& c, const std::string& v) { c.exclude = split_list(v); }},
        {"grid.totals", [](PipelineConfig& c, const std::string& v) { c.grid.totals = to_doubles(v); }},
        {"grid.fractions", [](PipelineConfig& c, const std::string& v) { c.grid.fractions = to_doubles(v); }},
        {"grid.interior_points",
         [](PipelineConfig& c, const std::string& v) { c.grid.interior_points = static_cast<int>(to_unsigned(v)); }},
        {"grid.scale_factors", [](PipelineConfig& c, const std::string& v) { c.grid.scale_factors = to_doubles(v); }},
        {"grid.growth_factors", [](PipelineConfig& c, const std::string& v) { c.grid.growth_factors = to_doubles(v); }},
        {"grid.epsilon", [](PipelineConfig& c, const std::string& v) { c.grid.epsilon = to_double(v); }},
        {"grid.shape_epsilon", [](PipelineConfig& c, const std::string& v) { c.grid.shape_epsilon = to_double(v); }},
        {"grid.min_samples", [](PipelineConfig& c, const std::string& v) { c.grid.min_samples = to_unsigned(v); }},
        {"grid.discriminant_n", [](PipelineConfig& c, const std::string& v) { c.grid.discriminant_n = to_double(v); }},
        {"grid.discriminant_base_n",
         [](PipelineConfig& c, const std::string& v) { c.grid.discriminant_base_n = to_double(v); }},
        {"grid.discriminant_ratio",
         [](PipelineConfig& c, const std::string& v) { c.grid.discriminant_ratio = to_double(v); }},
        {"validated.intent", [](PipelineConfig& c, const std::string& v) { c.thresholds.validated_intent = to_unsigned(v); }},
        {"validated.cohesion",
         [](PipelineConfig& c, const std::string& v) { c.thresholds.validated_cohesion = to_double(v); }},
        {"hardly.intent", [](PipelineConfig& c, const std::string& v) { c.thresholds.hardly_intent = to_unsigned(v); }},
        {"hardly.cohesion", [](PipelineConfig& c, const std::string& v) { c.thresholds.hardly_cohesion = to_double(v); }},
        {"tau", [](PipelineConfig& c, const std::string& v) { c.thresholds.tau = to_double(v); }},
    };
    return table;
}

}  // namespace

void PipelineConfig::set(const std::string& key, const std::string& value) {
    auto it = setters().find(key);
    if (it == setters().end()) throw input_error("unknown configuration key '" + key + "'");
    try {
        it->second(*this, value);
    } catch (const input_error& e) {
        throw input_error(key + ": " + e.what());
    }
}

void PipelineConfig::validate() const {
    grid.validate();
    thresholds.validate();
    if (k < 1) throw input_error("k must be >= 1");
    if (max_iterations < 1) throw input_error("kmeans.max_iterations must be >= 1");
    if (out.empty()) throw input_error("out must be non-empty");
}

PipelineConfig PipelineConfig::parse(std::istream& in, const std::string& origin) {
    PipelineConfig c;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        std::string where = origin + ":" + std::to_string(lineno) + ": ";
        if (eq == std::string::npos) throw input_error(where + "expected 'key = value'");
        try {
            c.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
        } catch (const input_error& e) {
            throw input_error(where + e.what());
        }
    }
    try {
        c.validate();
    } catch (const input_error& e) {
        throw input_error(origin + ": " + e.what());
    }
    return c;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("config not found: " + path);
    return parse(in, path);
}

}  // namespace fcaim
