#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcaim/expr.hpp"
#include "fcaim/property_vector.hpp"

namespace fcaim {

/// A named interestingness measure: computable from its expression, or
/// declared-only with a supplied property vector.
struct MeasureDef {
    std::string name;
    std::optional<MeasureExpr> expr;
    std::string source;  // expression text as written
    std::optional<PropertyVector> declared;
    /// P19: the antecedent size is random (measure rests on a probabilistic model).
    bool random_antecedent = false;
    std::vector<std::string> aliases;

    bool computable() const noexcept { return expr.has_value(); }
};

/// Thrown by eval on a declared-only measure.
class not_computable : public input_error {
public:
    explicit not_computable(const std::string& name)
        : input_error("measure '" + name + "' is declared-only and cannot be evaluated") {}
};

/// Evaluates a computable measure. Domain faults come back as an undefined
/// Evaluation, never as an exception.
Evaluation eval_measure(const MeasureDef& m, const ContingencyTable& t);

class Catalog {
public:
    Catalog() = default;

    /// Appends an entry; throws input_error on duplicate names or an entry
    /// that is neither computable nor declared.
    void add(MeasureDef def);
    void add_alias(const std::string& alias, const std::string& target);

    const std::vector<MeasureDef>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const MeasureDef& operator[](std::size_t i) const { return entries_.at(i); }

    /// Index by exact name or alias, then by case-insensitive match.
    std::optional<std::size_t> find(const std::string& name) const;
    /// As find, but throws input_error when absent.
    std::size_t index_of(const std::string& name) const;
    const MeasureDef& at(const std::string& name) const { return entries_[index_of(name)]; }

    std::vector<std::string> names() const;

    /// Line format:
    ///   name := expression [P19=1]
    ///   name :declared [P3=0 P4=1 ... P14=concave ... P21=1]
    ///   alias :alias canonical-name
    /// '#' starts a comment line.
    static Catalog parse(std::istream& in, const std::string& origin = "<catalog>");
    static Catalog load(const std::string& path);
    /// The bundled catalog of 61 measures.
    static Catalog load_default();

private:
    std::vector<MeasureDef> entries_;
    std::map<std::string, std::size_t> index_;
};

std::string default_catalog_path();

/// Parses "[P3=0 P4=1 ... P14=linear ...]"; requires all of P3..P21.
PropertyVector parse_declared_vector(const std::string& text);
std::string format_declared_vector(const PropertyVector& v);

}  // namespace fcaim
