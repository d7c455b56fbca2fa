#include "fcaim/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace fcaim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool starts_with(const std::string& s, std::size_t at, std::string_view prefix) {
    return s.compare(at, prefix.size(), prefix) == 0;
}

// "[P3=0 P4=1 ...]" -> (property, value) pairs in order of appearance.
std::vector<std::pair<int, std::string>> parse_bracket(const std::string& text) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw input_error("property vector must be enclosed in [ ]: " + text);
    std::istringstream in(t.substr(1, t.size() - 2));
    std::vector<std::pair<int, std::string>> out;
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || tok[0] != 'P') throw input_error("malformed property entry '" + tok + "'");
        int p = 0;
        try {
            std::size_t used = 0;
            p = std::stoi(tok.substr(1, eq - 1), &used);
            if (used != eq - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw input_error("malformed property entry '" + tok + "'");
        }
        if (p < kFirstProperty || p > kLastProperty) throw input_error("unknown property '" + tok + "'");
        for (const auto& [q, _] : out)
            if (q == p) throw input_error("property P" + std::to_string(p) + " given twice");
        out.emplace_back(p, tok.substr(eq + 1));
    }
    return out;
}

bool parse_bit(const std::string& v, int p) {
    if (v == "0") return false;
    if (v == "1") return true;
    throw input_error("P" + std::to_string(p) + " must be 0 or 1, got '" + v + "'");
}

}  // namespace

PropertyVector parse_declared_vector(const std::string& text) {
    PropertyVector v;
    std::array<bool, kPropertyCount> seen{};
    for (const auto& [p, value] : parse_bracket(text)) {
        seen[property_slot(p)] = true;
        if (p == 14) {
            auto s = parse_shape(value);
            if (!s) throw input_error("P14 must be concave, linear, convex or mixed, got '" + value + "'");
            v.shape = *s;
        } else {
            v.set(p, parse_bit(value, p));
        }
    }
    std::string missing;
    for (int p = kFirstProperty; p <= kLastProperty; ++p)
        if (!seen[property_slot(p)]) missing += (missing.empty() ? "P" : " P") + std::to_string(p);
    if (!missing.empty()) throw input_error("declared property vector is missing " + missing);
    for (int p = kFirstProperty; p <= kLastProperty; ++p)
        v.evidence[property_slot(p)] = "declared";
    return v;
}

std::string format_declared_vector(const PropertyVector& v) {
    std::string out = "[";
    for (int p = kFirstProperty; p <= kLastProperty; ++p) {
        if (p > kFirstProperty) out += ' ';
        out += "P" + std::to_string(p) + "=";
        out += p == 14 ? std::string(shape_name(v.shape)) : std::string(v.get(p) ? "1" : "0");
    }
    return out + "]";
}

Evaluation eval_measure(const MeasureDef& m, const ContingencyTable& t) {
    if (!m.computable()) throw not_computable(m.name);
    return m.expr->evaluate(t);
}

void Catalog::add(MeasureDef def) {
    if (def.name.empty()) throw input_error("measure name must be non-empty");
    if (index_.count(def.name)) throw input_error("duplicate measure name '" + def.name + "'");
    if (def.computable() && def.declared)
        throw input_error("measure '" + def.name + "' is computable and must not supply a property vector");
    if (!def.computable() && !def.declared)
        throw input_error("declared-only measure '" + def.name + "' is missing its property vector");
    index_.emplace(def.name, entries_.size());
    entries_.push_back(std::move(def));
}

void Catalog::add_alias(const std::string& alias, const std::string& target) {
    if (index_.count(alias)) throw input_error("duplicate measure name '" + alias + "'");
    auto it = index_.find(target);
    if (it == index_.end()) throw input_error("alias '" + alias + "' targets unknown measure '" + target + "'");
    std::size_t idx = it->second;
    entries_[idx].aliases.push_back(alias);
    index_.emplace(alias, idx);
}

std::optional<std::size_t> Catalog::find(const std::string& name) const {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    std::string key = lower(name);
    std::optional<std::size_t> hit;
    for (const auto& [n, idx] : index_) {
        if (lower(n) != key) continue;
        if (hit && *hit != idx) return std::nullopt;
        hit = idx;
    }
    return hit;
}

std::size_t Catalog::index_of(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw input_error("unknown measure '" + name + "'");
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
}

Catalog Catalog::parse(std::istream& in, const std::string& origin) {
    Catalog cat;
    std::vector<std::pair<std::string, std::string>> aliases;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = origin + ":" + std::to_string(lineno) + ": ";
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        try {
            auto colon = t.find(':');
            if (colon == std::string::npos) throw input_error("expected ':=', ':declared' or ':alias'");
            MeasureDef def;
            def.name = trim(t.substr(0, colon));
            if (def.name.empty()) throw input_error("missing measure name");
            if (starts_with(t, colon, ":=")) {
                std::string rest = t.substr(colon + 2);
                auto bracket = rest.find('[');
                if (bracket != std::string::npos) {
                    for (const auto& [p, value] : parse_bracket(rest.substr(bracket))) {
                        if (p != 19) throw input_error("computable entries may only set P19");
                        def.random_antecedent = parse_bit(value, p);
                    }
                    rest = rest.substr(0, bracket);
                }
                def.source = trim(rest);
                if (def.source.empty()) throw input_error("empty expression for '" + def.name + "'");
                def.expr = MeasureExpr::parse(def.source);
            } else if (starts_with(t, colon, ":declared")) {
                std::string rest = trim(t.substr(colon + 9));
                if (rest.empty())
                    throw input_error("declared-only measure '" + def.name + "' is missing its property vector");
                def.declared = parse_declared_vector(rest);
                def.random_antecedent = def.declared->get(19);
            } else if (starts_with(t, colon, ":alias")) {
                std::string target = trim(t.substr(colon + 6));
                if (target.empty()) throw input_error("alias without target");
                aliases.emplace_back(def.name, target);
                continue;
            } else {
                throw input_error("expected ':=', ':declared' or ':alias'");
            }
            cat.add(std::move(def));
        } catch (const syntax_error& e) {
            throw input_error(where + "malformed expression: " + e.what());
        } catch (const unknown_identifier& e) {
            throw input_error(where + "malformed expression: " + e.what());
        } catch (const input_error& e) {
            throw input_error(where + e.what());
        }
    }
    for (const auto& [alias, target] : aliases) cat.add_alias(alias, target);
    return cat;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("catalog not found: " + path);
    return parse(in, path);
}

std::string default_catalog_path() { return std::string(FCAIM_DATA_DIR) + "/measures.cat"; }

Catalog Catalog::load_default() { return load(default_catalog_path()); }

}  // namespace fcaim
