#include "fcaim/context.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace fcaim {

namespace {

void require_unique(const std::vector<std::string>& names, const char* kind) {
    std::set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second) throw input_error(std::string("duplicate ") + kind + " name '" + n + "'");
}

std::size_t parse_count(const std::string& line, const char* what) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(line, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != line.size() || line[0] == '-')
        throw input_error(std::string("CXT: expected ") + what + " count, got '" + line + "'");
    return v;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<Bitset> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
    require_unique(objects_, "object");
    require_unique(attributes_, "attribute");
    if (rows_.size() != objects_.size())
        throw input_error("context has " + std::to_string(objects_.size()) + " objects but " +
                          std::to_string(rows_.size()) + " rows");
    columns_.assign(attributes_.size(), Bitset(objects_.size()));
    for (std::size_t g = 0; g < rows_.size(); ++g) {
        if (rows_[g].size() != attributes_.size())
            throw input_error("row of object '" + objects_[g] + "' has " + std::to_string(rows_[g].size()) +
                              " bits, expected " + std::to_string(attributes_.size()));
        rows_[g].for_each([&](std::size_t m) { columns_[m].set(g); });
    }
}

Bitset FormalContext::derive_objects(const Bitset& objects) const {
    if (objects.size() != object_count()) throw std::invalid_argument("object set size mismatch");
    Bitset out = Bitset::full(attribute_count());
    objects.for_each([&](std::size_t g) { out &= rows_[g]; });
    return out;
}

Bitset FormalContext::derive_attributes(const Bitset& attributes) const {
    if (attributes.size() != attribute_count()) throw std::invalid_argument("attribute set size mismatch");
    Bitset out = Bitset::full(object_count());
    attributes.for_each([&](std::size_t m) { out &= columns_[m]; });
    return out;
}

std::size_t FormalContext::object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == name) return i;
    throw input_error("unknown object '" + name + "'");
}

std::size_t FormalContext::attribute_index(const std::string& name) const {
    for (std::size_t i = 0; i < attributes_.size(); ++i)
        if (attributes_[i] == name) return i;
    throw input_error("unknown attribute '" + name + "'");
}

Bitset FormalContext::object_set(const std::vector<std::string>& names) const {
    Bitset out(object_count());
    for (const auto& n : names) out.set(object_index(n));
    return out;
}

void FormalContext::write_cxt(std::ostream& out) const {
    out << "B\n\n" << object_count() << '\n' << attribute_count() << "\n\n";
    for (const auto& g : objects_) out << g << '\n';
    for (const auto& m : attributes_) out << m << '\n';
    for (const auto& r : rows_) {
        for (std::size_t m = 0; m < attribute_count(); ++m) out << (r.test(m) ? 'X' : '.');
        out << '\n';
    }
}

std::string FormalContext::to_cxt() const {
    std::ostringstream os;
    write_cxt(os);
    return os.str();
}

FormalContext FormalContext::read_cxt(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const std::string& {
        if (pos >= lines.size()) throw input_error(std::string("CXT: file ends before ") + what);
        return lines[pos++];
    };
    if (next("header") != "B") throw input_error("CXT: first line must be 'B'");
    if (!next("blank line").empty()) throw input_error("CXT: line 2 must be blank");
    std::size_t g_count = parse_count(next("object count"), "object");
    std::size_t m_count = parse_count(next("attribute count"), "attribute");
    if (!next("blank line").empty()) throw input_error("CXT: line 5 must be blank");
    std::vector<std::string> objects, attributes;
    for (std::size_t i = 0; i < g_count; ++i) objects.push_back(next("object names"));
    for (std::size_t i = 0; i < m_count; ++i) attributes.push_back(next("attribute names"));
    std::vector<Bitset> rows;
    for (std::size_t g = 0; g < g_count; ++g) {
        const std::string& r = next("incidence rows");
        if (r.size() != m_count)
            throw input_error("CXT: row " + std::to_string(g + 1) + " has " + std::to_string(r.size()) +
                              " cells, expected " + std::to_string(m_count));
        Bitset b(m_count);
        for (std::size_t m = 0; m < m_count; ++m) {
            if (r[m] == 'X' || r[m] == 'x')
                b.set(m);
            else if (r[m] != '.')
                throw input_error("CXT: row " + std::to_string(g + 1) + " contains '" + std::string(1, r[m]) + "'");
        }
        rows.push_back(std::move(b));
    }
    for (; pos < lines.size(); ++pos)
        if (!lines[pos].empty()) throw input_error("CXT: unexpected content after the incidence rows");
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext FormalContext::parse_cxt(const std::string& text) {
    std::istringstream in(text);
    return read_cxt(in);
}

}  // namespace fcaim
