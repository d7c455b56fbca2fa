#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcaim {

using Rows = std::vector<std::vector<double>>;

/// One agglomeration step. Leaves are ids 0..n-1; step s creates id n + s.
struct Merge {
    std::size_t left = 0;   // smaller of the two joined ids
    std::size_t right = 0;
    double height = 0;      // sqrt of the Lance-Williams Ward dissimilarity
    std::size_t id = 0;
};

struct Dendrogram {
    std::size_t leaves = 0;
    std::vector<Merge> merges;

    /// CSV "left,right,height,id".
    void write_csv(std::ostream& out) const;
};

enum class Method { ahc, kmeans, reference };
std::string_view method_name(Method m);

/// Cluster label per object. Labels lie in [0, k) and every cluster is
/// non-empty. `objects` names the rows; `cluster_names` optionally names the
/// labels (otherwise they print as C1..Ck).
struct Partition {
    Method method = Method::ahc;
    std::vector<std::string> objects;
    std::vector<std::size_t> labels;
    std::size_t k = 0;
    std::vector<std::string> cluster_names;

    std::size_t size() const noexcept { return labels.size(); }
    std::string cluster_name(std::size_t label) const;
    /// Object indices of cluster `label`, ascending.
    std::vector<std::size_t> members(std::size_t label) const;
    std::vector<std::vector<std::size_t>> clusters() const;

    /// Checks label range, non-empty clusters, and name count.
    void validate() const;

    /// Partition with labels renumbered by smallest member index.
    static Partition from_labels(Method method, const std::vector<std::size_t>& raw,
                                 std::vector<std::string> objects = {});

    /// CSV "object,label" with the cluster name as label.
    void write_csv(std::ostream& out) const;
    static Partition read_csv(std::istream& in, Method method = Method::reference);
};

/// Ward-linkage agglomerative clustering on Euclidean distances. Ties
/// (within 1e-9 relative) go to the lexicographically smallest (min id,
/// max id) pair. Throws input_error on empty input or ragged rows.
Dendrogram ahc_ward(const Rows& rows);

/// Keeps the first leaves - k merges. Throws input_error unless 1 <= k <= leaves.
Partition cut_dendrogram(const Dendrogram& d, std::size_t k, std::vector<std::string> objects = {});

struct KMeansResult {
    Partition partition;
    Rows centroids;
    /// Within-cluster sum of squares after each assignment step.
    std::vector<double> objective;
    std::size_t iterations = 0;
};

/// Lloyd's algorithm with farthest-first seeding from row (seed mod n).
/// Throws input_error when k exceeds the number of distinct rows.
KMeansResult kmeans(const Rows& rows, std::size_t k, unsigned long seed, std::size_t max_iterations = 300,
                    std::vector<std::string> objects = {});

struct ClusterMatch {
    std::size_t first = 0;   // label in p1
    std::size_t second = 0;  // label in p2
    std::size_t overlap = 0;
};

struct PartitionComparison {
    std::vector<ClusterMatch> matches;
    /// Object indices (in p1 order) outside every matched intersection.
    std::vector<std::size_t> disagreement;
    std::vector<std::string> disagreement_names;
};

/// Greedy maximum-overlap matching. Objects are aligned by name; throws
/// input_error when the two object sets differ.
PartitionComparison compare_partitions(const Partition& p1, const Partition& p2);

/// Reference clusters: "[C1]" style section headers followed by one member
/// name per line, then "[ahc]" and "[kmeans]" sections of "name = cluster"
/// lines placing the measures the two methods disagree on.
struct ReferenceClusters {
    std::vector<std::string> cluster_names;
    std::vector<std::vector<std::string>> clusters;
    std::vector<std::pair<std::string, std::string>> ahc_extra;
    std::vector<std::pair<std::string, std::string>> kmeans_extra;

    static ReferenceClusters parse(std::istream& in, const std::string& origin = "<reference>");
    static ReferenceClusters load(const std::string& path);
    static ReferenceClusters load_default();

    /// Clusters without the extra measures.
    Partition core() const;
    Partition ahc() const;
    Partition kmeans() const;
};

std::string default_reference_path();

}  // namespace fcaim
