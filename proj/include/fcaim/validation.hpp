#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fcaim/clustering.hpp"
#include "fcaim/context.hpp"
#include "fcaim/lattice.hpp"

namespace fcaim {

enum class ClusterVerdict { validated, hardly_validated, questionable };
std::string_view verdict_name(ClusterVerdict v);

struct ValidationThresholds {
    std::size_t validated_intent = 2;
    double validated_cohesion = 0.8;
    std::size_t hardly_intent = 1;
    double hardly_cohesion = 0.4;
    /// Relative gap below which a floating assignment is unresolved.
    double tau = 0.25;

    void validate() const;
};

/// Cluster labels aligned to context objects. Objects outside the partition
/// are floating (no label).
struct Membership {
    std::vector<std::optional<std::size_t>> label;
    std::vector<std::string> cluster_names;

    std::size_t k() const noexcept { return cluster_names.size(); }
    std::vector<std::size_t> members(std::size_t cluster) const;
    std::vector<std::size_t> floating() const;

    /// Throws input_error listing every partition object missing from ctx.
    static Membership align(const FormalContext& ctx, const Partition& p);
};

/// Hasse distance between object concepts, precomputed for all object pairs.
class GammaDistances {
public:
    explicit GammaDistances(const ConceptLattice& lattice);
    std::size_t operator()(std::size_t g, std::size_t h) const { return d_.at(g).at(h); }
    /// Mean distance from g to `members`, skipping g itself; 0 when nothing is left.
    double mean(std::size_t g, const std::vector<std::size_t>& members) const;
    std::size_t min(std::size_t g, const std::vector<std::size_t>& members) const;

private:
    std::vector<std::vector<std::size_t>> d_;
};

struct Intruder {
    std::size_t object = 0;
    /// Own cluster; empty for a floating object.
    std::optional<std::size_t> own;
    double d_cluster = 0;
    std::size_t min_d_cluster = 0;
    double d_own = 0;
    /// d_own <= d_cluster. Floating intruders are never explained but do not
    /// count against the verdict.
    bool explained = false;
};

struct ClusterValidation {
    std::size_t cluster = 0;
    std::string name;
    std::vector<std::size_t> members;
    std::size_t covering = 0;  // concept index of (O'', O')
    std::size_t intent_size = 0;
    double cohesion = 0;
    std::vector<Intruder> intruders;
    /// Member whose object concept groups the most members (ties: lowest index).
    std::size_t center = 0;
    std::size_t center_coverage = 0;
    ClusterVerdict verdict = ClusterVerdict::questionable;
};

struct AssignmentResult {
    std::size_t object = 0;
    std::vector<double> mean_distance;  // per cluster
    std::optional<std::size_t> assigned;
    std::string reason;
};

/// Concept index of (O'', O'). Throws input_error on an empty cluster.
std::size_t covering_concept(const ConceptLattice& lattice, const std::vector<std::size_t>& cluster);

std::vector<Intruder> intruder_analysis(const ConceptLattice& lattice, const GammaDistances& gd,
                                        const std::vector<std::size_t>& cluster, const Membership& membership);

ClusterValidation validate_cluster(const ConceptLattice& lattice, const GammaDistances& gd, std::size_t cluster,
                                   const Membership& membership, const ValidationThresholds& th = {});

/// Verdict rule alone, for callers holding precomputed metrics.
ClusterVerdict classify(std::size_t intent_size, double cohesion, bool intruders_explained,
                        const ValidationThresholds& th = {});

AssignmentResult assign_floating(const GammaDistances& gd, std::size_t object, const Membership& membership,
                                 const ValidationThresholds& th = {});

/// Disjoint blocks covering the cluster. A validated cluster is returned
/// whole; otherwise blocks are concept extents inside the cluster chosen
/// greedily by size then intent size, and leftovers become singletons.
std::vector<std::vector<std::size_t>> split_suggestion(const ConceptLattice& lattice, const GammaDistances& gd,
                                                       std::size_t cluster, const Membership& membership,
                                                       const ValidationThresholds& th = {});

struct ValidationReport {
    std::vector<ClusterValidation> clusters;
    std::vector<AssignmentResult> assignments;
    std::vector<std::vector<std::vector<std::size_t>>> splits;  // per cluster

    void write_text(std::ostream& out, const ConceptLattice& lattice, const Membership& m) const;
    /// "cluster,verdict,cohesion,intent_size,intent,intruders".
    void write_csv(std::ostream& out, const ConceptLattice& lattice) const;
    /// "measure,assigned,<cluster>..." one column of mean distances per cluster.
    void write_assignments_csv(std::ostream& out, const ConceptLattice& lattice, const Membership& m) const;
};

ValidationReport validate_partition(const ConceptLattice& lattice, const Membership& membership,
                                    const ValidationThresholds& th = {});

}  // namespace fcaim
