#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fcaim/bitset.hpp"
#include "fcaim/contingency.hpp"

namespace fcaim {

/// Formal context (G, M, R): named objects, named attributes, and the
/// incidence relation stored both row-wise and column-wise.
class FormalContext {
public:
    FormalContext() = default;
    /// rows[g] is the attribute set of object g; every row must have
    /// attributes.size() bits. Names must be unique within each list.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes, std::vector<Bitset> rows);

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<std::string>& attributes() const noexcept { return attributes_; }

    const Bitset& row(std::size_t g) const { return rows_.at(g); }
    const Bitset& column(std::size_t m) const { return columns_.at(m); }
    bool incidence(std::size_t g, std::size_t m) const { return rows_.at(g).test(m); }

    /// O' : attributes shared by every object of O. O = {} gives M.
    Bitset derive_objects(const Bitset& objects) const;
    /// A' : objects having every attribute of A. A = {} gives G.
    Bitset derive_attributes(const Bitset& attributes) const;
    /// A''.
    Bitset closure(const Bitset& attributes) const { return derive_objects(derive_attributes(attributes)); }
    /// O''.
    Bitset object_closure(const Bitset& objects) const { return derive_attributes(derive_objects(objects)); }

    Bitset empty_objects() const { return Bitset(object_count()); }
    Bitset empty_attributes() const { return Bitset(attribute_count()); }

    /// Throws input_error "unknown object 'x'" / "unknown attribute 'x'".
    std::size_t object_index(const std::string& name) const;
    std::size_t attribute_index(const std::string& name) const;
    Bitset object_set(const std::vector<std::string>& names) const;

    /// Burmeister format: "B", blank, |G|, |M|, blank, object names,
    /// attribute names, then one row of '.'/'X' per object.
    void write_cxt(std::ostream& out) const;
    std::string to_cxt() const;
    static FormalContext read_cxt(std::istream& in);
    static FormalContext parse_cxt(const std::string& text);

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> columns_;
};

}  // namespace fcaim
