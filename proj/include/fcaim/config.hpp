#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fcaim/properties.hpp"
#include "fcaim/validation.hpp"

namespace fcaim {

/// Settings shared by every subcommand. Read from "key = value" lines;
/// '#' starts a comment; unknown keys are rejected. List values are
/// comma-separated.
///
///   catalog, reference, out
///   k, seed, kmeans.max_iterations, exclude
///   grid.totals, grid.fractions, grid.interior_points, grid.scale_factors,
///   grid.growth_factors, grid.epsilon, grid.shape_epsilon, grid.min_samples,
///   grid.discriminant_n, grid.discriminant_base_n, grid.discriminant_ratio
///   validated.intent, validated.cohesion, hardly.intent, hardly.cohesion, tau
struct PipelineConfig {
    std::string catalog;    // empty: bundled catalog
    std::string reference;  // empty: bundled reference clusters
    std::string out = "out";
    SamplingGrid grid;
    std::size_t k = 9;
    unsigned long seed = 0;
    std::size_t max_iterations = 300;
    ValidationThresholds thresholds;
    /// Measures kept out of clustering and validated as floating.
    std::vector<std::string> exclude;

    void set(const std::string& key, const std::string& value);
    void validate() const;

    static PipelineConfig parse(std::istream& in, const std::string& origin = "<config>");
    static PipelineConfig load(const std::string& path);
};

}  // namespace fcaim
