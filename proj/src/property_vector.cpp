#include "fcaim/property_vector.hpp"

namespace fcaim {

std::string_view shape_name(Shape s) {
    switch (s) {
    case Shape::concave: return "concave";
    case Shape::linear: return "linear";
    case Shape::convex: return "convex";
    case Shape::mixed: return "mixed";
    }
    return "mixed";
}

std::optional<Shape> parse_shape(std::string_view s) {
    if (s == "concave") return Shape::concave;
    if (s == "linear") return Shape::linear;
    if (s == "convex") return Shape::convex;
    if (s == "mixed") return Shape::mixed;
    return std::nullopt;
}

const std::vector<std::string>& matrix_columns() {
    static const std::vector<std::string> cols = [] {
        std::vector<std::string> c;
        for (int p = kFirstProperty; p <= kLastProperty; ++p) {
            if (p == 14) {
                c.push_back("P14.1");
                c.push_back("P14.2");
                c.push_back("P14.3");
            } else {
                c.push_back("P" + std::to_string(p));
            }
        }
        return c;
    }();
    return cols;
}

std::vector<bool> matrix_row(const PropertyVector& v) {
    std::vector<bool> row;
    row.reserve(kPropertyCount + 2);
    for (int p = kFirstProperty; p <= kLastProperty; ++p) {
        if (p == 14) {
            row.push_back(v.shape == Shape::concave);
            row.push_back(v.shape == Shape::linear);
            row.push_back(v.shape == Shape::convex);
        } else {
            row.push_back(v.get(p));
        }
    }
    return row;
}

}  // namespace fcaim
