// Property verdicts derived by hand from the closed forms, before any run
// of the engine. Shape and fixed values are listed separately.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcaim/property_vector.hpp"

namespace analytic {

struct Expected {
    std::string measure;
    // P3..P13, P15..P21 in order (P14 lives in `shape`).
    std::vector<int> bits;
    fcaim::Shape shape;
    std::optional<double> a, b, c;
};

inline const std::vector<int>& listed_properties() {
    static const std::vector<int> p{3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20, 21};
    return p;
}

using fcaim::Shape;

//                      P3 P4 P5 P6 P7 P8 P9 10 11 12 13 15 16 17 18 19 20 21
inline const std::vector<Expected>& table() {
    static const std::vector<Expected> t{
        {"Confidence", {1, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1}, Shape::linear, {}, 1.0, 0.5},
        {"Support", {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}, Shape::linear, {}, {}, {}},
        {"lift", {0, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1}, Shape::linear, 1.0, {}, {}},
        {"Piatetsky-Shapiro", {0, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1}, Shape::linear, 0.0, {}, {}},
        {"Correlation", {0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1}, Shape::linear, 0.0, {}, {}},
        {"Loevinger", {1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1}, Shape::linear, 0.0, 1.0, {}},
        {"Sebag", {1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1}, Shape::convex, {}, {}, 1.0},
        {"Laplace", {1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}, Shape::linear, {}, {}, 0.5},
        {"Jaccard", {0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}, Shape::convex, {}, {}, {}},
        {"Cosine", {0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}, Shape::linear, {}, {}, {}},
        {"Odds ratio", {0, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1}, Shape::convex, 1.0, {}, {}},
        {"Conviction", {1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1}, Shape::convex, 1.0, {}, {}},
    };
    return t;
}

/// Properties the engine cannot decide for a measure (undefined on every
/// implication table because p(X notY) = 0 there), coded 0.
inline const std::map<std::string, std::vector<int>>& undecided() {
    static const std::map<std::string, std::vector<int>> u{
        {"Sebag", {5, 10}}, {"Odds ratio", {5, 10}}, {"Conviction", {5, 10}}};
    return u;
}

}  // namespace analytic
