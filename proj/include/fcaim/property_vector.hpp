#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fcaim {

/// Properties P3..P21 of an interestingness measure.
inline constexpr int kFirstProperty = 3;
inline constexpr int kLastProperty = 21;
inline constexpr std::size_t kPropertyCount = kLastProperty - kFirstProperty + 1;

constexpr std::size_t property_slot(int p) { return static_cast<std::size_t>(p - kFirstProperty); }

/// Curve of the measure against the counter-example count (P14).
enum class Shape { concave, linear, convex, mixed };

std::string_view shape_name(Shape s);
std::optional<Shape> parse_shape(std::string_view s);

struct Undecided {
    int property = 0;
    std::string reason;
};

/// Verdicts for one measure. P14 lives in `shape`; its boolean slot is unused.
struct PropertyVector {
    std::array<bool, kPropertyCount> bits{};
    Shape shape = Shape::mixed;

    // Fixed values recorded when P9 / P10 / P11 hold.
    std::optional<double> independence_value;
    std::optional<double> implication_value;
    std::optional<double> equilibrium_value;

    /// Attraction values sit below the independence value and repulsion above.
    bool zones_inverted = false;

    std::vector<Undecided> undecided;
    /// One line of supporting evidence per property (witness table, counts).
    std::array<std::string, kPropertyCount> evidence;

    bool get(int p) const { return bits[property_slot(p)]; }
    void set(int p, bool v) { bits[property_slot(p)] = v; }

    /// Same verdicts (bits, shape); evidence and fixed values are not compared.
    bool same_verdicts(const PropertyVector& o) const { return bits == o.bits && shape == o.shape; }
};

/// Matrix column names: P3..P13, P14.1, P14.2, P14.3, P15..P21.
const std::vector<std::string>& matrix_columns();

/// Expands a vector into the 21 binary matrix cells (P14 disjunctively coded).
std::vector<bool> matrix_row(const PropertyVector& v);

}  // namespace fcaim
