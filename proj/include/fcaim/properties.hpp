#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fcaim/catalog.hpp"
#include "fcaim/contingency.hpp"
#include "fcaim/expr.hpp"
#include "fcaim/property_vector.hpp"

namespace fcaim {

/// Tables on which properties are sampled.
///
/// For every total n and every pair of marginal fractions (p(X), p(Y)) the
/// feasible n_xy interval [max(0, n_x + n_y - n), min(n_x, n_y)] is split into
/// `interior_points` strictly interior, evenly spaced values. Such an
/// (n, n_x, n_y) triple with its interior points is a "line".
struct SamplingGrid {
    std::vector<double> totals{100, 1000, 10000};
    std::vector<double> fractions{0.1, 0.3, 0.5, 0.7, 0.9};
    int interior_points = 9;
    /// K for P15 (both K1 and K2 range over it) and k for P20.
    std::vector<double> scale_factors{0.5, 2, 3};
    /// Multipliers of n for P7 (new records fall in notX notY).
    std::vector<double> growth_factors{1, 2, 4, 8};
    double epsilon = 1e-9;
    /// Second-difference tolerance for P14, relative to each line's value range.
    double shape_epsilon = 1e-7;
    /// P21 compares spreads at `discriminant_n` against `discriminant_base_n`.
    double discriminant_n = 1e6;
    double discriminant_base_n = 100;
    double discriminant_ratio = 0.1;
    std::size_t min_samples = 5;

    /// Throws input_error when a field is out of range.
    void validate() const;
};

enum class Situation { independence, implication, equilibrium };

std::string_view situation_name(Situation s);

/// Outcome of one property check. `decided == false` means the measure was
/// undefined on too much of the grid to conclude; `evidence` then says why.
struct Verdict {
    int property = 0;
    bool decided = false;
    bool holds = false;
    std::string evidence;
};

struct FixedValueResult {
    Verdict verdict;
    std::optional<double> value;
};

struct ZoneResult {
    Verdict attraction;  // P12
    Verdict repulsion;   // P13
    bool inverted = false;
};

struct ShapeResult {
    bool decided = false;
    Shape shape = Shape::mixed;
    std::string evidence;
};

// Grid samples. Exposed for tests and evidence reporting.
std::vector<ContingencyTable> interior_tables(const SamplingGrid& g);
std::vector<ContingencyTable> situation_tables(const SamplingGrid& g, Situation s);
/// Interior points of every line at total n, ordered by increasing n_xy.
std::vector<std::vector<ContingencyTable>> grid_lines(const SamplingGrid& g, double n);

std::string describe(const ContingencyTable& t);

/// P3, P4, P5, P16, P17, P18.
std::vector<Verdict> check_symmetry_family(const MeasureExpr& m, const SamplingGrid& g);
/// P6, P7, P8.
std::vector<Verdict> check_monotonicity_family(const MeasureExpr& m, const SamplingGrid& g);
/// P9, P10 or P11 with the fixed value when it holds.
FixedValueResult check_fixed_value(const MeasureExpr& m, const SamplingGrid& g, Situation s);
/// P12, P13. Without an independence value both are forced to 0.
ZoneResult check_zones(const MeasureExpr& m, const SamplingGrid& g, std::optional<double> independence_value);
/// P14.
ShapeResult check_shape(const MeasureExpr& m, const SamplingGrid& g);
/// P15, P20.
std::vector<Verdict> check_invariance(const MeasureExpr& m, const SamplingGrid& g);
/// P21.
Verdict check_discriminant(const MeasureExpr& m, const SamplingGrid& g);

/// Full vector for a measure. Declared-only measures pass through verbatim.
/// Enforces P9 = 0 => P12 = P13 = 0 and P4 = 0 => P17 = 0.
PropertyVector evaluate_all(const MeasureDef& m, const SamplingGrid& g);

/// Measures x 21 binary columns (P14 disjunctively coded).
struct PropertyMatrix {
    std::vector<std::string> measures;
    std::vector<std::vector<bool>> rows;
    /// Full per-measure vectors; empty when the matrix was read back from CSV.
    std::vector<PropertyVector> vectors;

    std::size_t size() const noexcept { return measures.size(); }
    bool at(std::size_t row, const std::string& column) const;

    /// Header "measure,P3,...,P21"; cells 0/1.
    void write_csv(std::ostream& out) const;
    static PropertyMatrix read_csv(std::istream& in);

    /// Per-bit evidence, one line per (measure, property).
    void write_evidence(std::ostream& out) const;
    /// Undecided properties, one line each.
    void write_undecided(std::ostream& out) const;
};

/// Evaluates every measure; rows follow catalog order.
PropertyMatrix build_matrix(const Catalog& c, const SamplingGrid& g);

}  // namespace fcaim
