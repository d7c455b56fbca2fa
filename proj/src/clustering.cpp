#include "fcaim/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "fcaim/contingency.hpp"
#include "fcaim/textio.hpp"

namespace fcaim {

namespace {

void check_rows(const Rows& rows) {
    if (rows.empty()) throw input_error("clustering needs at least one row");
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw input_error("dimension mismatch: rows of length " + std::to_string(rows.front().size()) + " and " +
                              std::to_string(r.size()));
}

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    if (names.size() != n)
        throw input_error("expected " + std::to_string(n) + " object names, got " + std::to_string(names.size()));
    return names;
}

std::string format_height(double h) {
    std::ostringstream os;
    os.precision(17);
    os << h;
    return os.str();
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
    case Method::ahc: return "AHC";
    case Method::kmeans: return "K-means";
    case Method::reference: return "reference";
    }
    return "?";
}

void Dendrogram::write_csv(std::ostream& out) const {
    out << "left,right,height,id\n";
    for (const auto& m : merges) out << m.left << ',' << m.right << ',' << format_height(m.height) << ',' << m.id << '\n';
}

std::string Partition::cluster_name(std::size_t label) const {
    if (label < cluster_names.size()) return cluster_names[label];
    return "C" + std::to_string(label + 1);
}

std::vector<std::size_t> Partition::members(std::size_t label) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) out.push_back(i);
    return out;
}

std::vector<std::vector<std::size_t>> Partition::clusters() const {
    std::vector<std::vector<std::size_t>> out(k);
    for (std::size_t i = 0; i < labels.size(); ++i) out.at(labels[i]).push_back(i);
    return out;
}

void Partition::validate() const {
    if (objects.size() != labels.size())
        throw input_error("partition has " + std::to_string(labels.size()) + " labels but " +
                          std::to_string(objects.size()) + " object names");
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t l : labels) {
        if (l >= k) throw input_error("partition label " + std::to_string(l) + " out of range [0, " + std::to_string(k) + ")");
        ++sizes[l];
    }
    for (std::size_t l = 0; l < k; ++l)
        if (sizes[l] == 0) throw input_error("partition cluster " + cluster_name(l) + " is empty");
    std::set<std::string> seen;
    for (const auto& o : objects)
        if (!seen.insert(o).second) throw input_error("duplicate object '" + o + "' in partition");
}

Partition Partition::from_labels(Method method, const std::vector<std::size_t>& raw, std::vector<std::string> objects) {
    std::map<std::size_t, std::size_t> renumber;
    Partition p;
    p.method = method;
    p.objects = default_names(raw.size(), std::move(objects));
    for (std::size_t l : raw) {
        auto [it, inserted] = renumber.emplace(l, renumber.size());
        p.labels.push_back(it->second);
    }
    p.k = renumber.size();
    return p;
}

void Partition::write_csv(std::ostream& out) const {
    out << "object,label\n";
    for (std::size_t i = 0; i < labels.size(); ++i) write_csv_row(out, {objects[i], cluster_name(labels[i])});
}

Partition Partition::read_csv(std::istream& in, Method method) {
    auto table = read_csv_table(in);
    if (table.empty() || table.front() != std::vector<std::string>{"object", "label"})
        throw input_error("partition CSV: header must be 'object,label'");
    Partition p;
    p.method = method;
    std::map<std::string, std::size_t> label_of;
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (table[i].size() != 2)
            throw input_error("partition CSV: row " + std::to_string(i + 1) + " must have 2 cells");
        auto [it, inserted] = label_of.emplace(table[i][1], p.cluster_names.size());
        if (inserted) p.cluster_names.push_back(table[i][1]);
        p.objects.push_back(table[i][0]);
        p.labels.push_back(it->second);
    }
    p.k = p.cluster_names.size();
    p.validate();
    return p;
}

Dendrogram ahc_ward(const Rows& rows) {
    check_rows(rows);
    const std::size_t n = rows.size();
    // d[i][j]: Ward dissimilarity between the clusters held in slots i and j.
    // For singletons it is the squared Euclidean distance; Lance-Williams
    // keeps it equal to 2 |A||B| / (|A| + |B|) * |c_A - c_B|^2.
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = sq_dist(rows[i], rows[j]);
    std::vector<std::size_t> id(n), size(n, 1);
    std::iota(id.begin(), id.end(), 0);
    std::vector<bool> active(n, true);

    Dendrogram out;
    out.leaves = n;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (active[j] && d[i][j] < best) best = d[i][j];
        }
        double tol = 1e-9 * std::max(1.0, std::fabs(best));
        std::size_t bi = n, bj = n;
        std::pair<std::size_t, std::size_t> key{n * 2, n * 2};
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!active[j] || d[i][j] > best + tol) continue;
                std::pair<std::size_t, std::size_t> k{std::min(id[i], id[j]), std::max(id[i], id[j])};
                if (k < key) key = k, bi = i, bj = j;
            }
        }
        const double dij = d[bi][bj];
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k] || k == bi || k == bj) continue;
            double ni = static_cast<double>(size[bi]), nj = static_cast<double>(size[bj]),
                   nk = static_cast<double>(size[k]);
            double v = ((ni + nk) * d[bi][k] + (nj + nk) * d[bj][k] - nk * dij) / (ni + nj + nk);
            d[bi][k] = d[k][bi] = v;
        }
        out.merges.push_back({key.first, key.second, std::sqrt(std::max(0.0, dij)), n + step});
        active[bj] = false;
        size[bi] += size[bj];
        id[bi] = n + step;
    }
    return out;
}

Partition cut_dendrogram(const Dendrogram& d, std::size_t k, std::vector<std::string> objects) {
    if (k < 1 || k > d.leaves)
        throw input_error("k = " + std::to_string(k) + " out of range [1, " + std::to_string(d.leaves) + "]");
    if (d.merges.size() + 1 != d.leaves) throw input_error("dendrogram must have leaves - 1 merges");
    std::vector<std::size_t> parent(d.leaves + d.merges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t s = 0; s + k < d.leaves; ++s) {
        const auto& m = d.merges[s];
        parent[find(m.left)] = m.id;
        parent[find(m.right)] = m.id;
    }
    std::vector<std::size_t> raw(d.leaves);
    for (std::size_t i = 0; i < d.leaves; ++i) raw[i] = find(i);
    return Partition::from_labels(Method::ahc, raw, std::move(objects));
}

KMeansResult kmeans(const Rows& rows, std::size_t k, unsigned long seed, std::size_t max_iterations,
                    std::vector<std::string> objects) {
    check_rows(rows);
    const std::size_t n = rows.size(), dim = rows.front().size();
    std::set<std::vector<double>> distinct(rows.begin(), rows.end());
    if (k < 1 || k > distinct.size())
        throw input_error("k = " + std::to_string(k) + " exceeds the " + std::to_string(distinct.size()) +
                          " distinct rows");
    if (max_iterations < 1) throw input_error("k-means needs at least one iteration");

    // Farthest-first seeding; ties go to the smallest row index.
    Rows centroids{rows[seed % n]};
    std::vector<double> nearest(n);
    for (std::size_t i = 0; i < n; ++i) nearest[i] = sq_dist(rows[i], centroids[0]);
    while (centroids.size() < k) {
        std::size_t far = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (nearest[i] > nearest[far]) far = i;
        centroids.push_back(rows[far]);
        for (std::size_t i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], sq_dist(rows[i], centroids.back()));
    }

    KMeansResult r;
    std::vector<std::size_t> assign(n, k), previous;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        previous = assign;
        double objective = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = 0;
            double bd = sq_dist(rows[i], centroids[0]);
            for (std::size_t c = 1; c < k; ++c) {
                double dc = sq_dist(rows[i], centroids[c]);
                if (dc < bd) bd = dc, best = c;
            }
            assign[i] = best;
            objective += bd;
        }
        r.objective.push_back(objective);
        r.iterations = it + 1;
        if (assign == previous) break;

        auto recompute = [&](std::size_t c) {
            std::vector<double> sum(dim, 0);
            std::size_t count = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (assign[i] != c) continue;
                ++count;
                for (std::size_t j = 0; j < dim; ++j) sum[j] += rows[i][j];
            }
            if (count)
                for (std::size_t j = 0; j < dim; ++j) centroids[c][j] = sum[j] / static_cast<double>(count);
            return count;
        };
        std::vector<std::size_t> counts(k);
        for (std::size_t c = 0; c < k; ++c) counts[c] = recompute(c);
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c]) continue;
            // Move the point farthest from its centroid into the empty cluster.
            std::size_t far = n;
            double fd = -1;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[assign[i]] < 2) continue;
                double di = sq_dist(rows[i], centroids[assign[i]]);
                if (di > fd) fd = di, far = i;
            }
            if (far == n) break;
            std::size_t from = assign[far];
            assign[far] = c;
            centroids[c] = rows[far];
            counts[c] = 1;
            counts[from] = recompute(from);
        }
    }
    r.partition = Partition::from_labels(Method::kmeans, assign, std::move(objects));
    // Re-order centroids to match the renumbered labels.
    Rows ordered(r.partition.k);
    for (std::size_t i = 0; i < n; ++i) ordered[r.partition.labels[i]] = centroids[assign[i]];
    r.centroids = std::move(ordered);
    return r;
}

PartitionComparison compare_partitions(const Partition& p1, const Partition& p2) {
    p1.validate();
    p2.validate();
    std::map<std::string, std::size_t> pos2;
    for (std::size_t i = 0; i < p2.objects.size(); ++i) pos2.emplace(p2.objects[i], i);
    std::vector<std::string> missing;
    std::vector<std::size_t> label2(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
        auto it = pos2.find(p1.objects[i]);
        if (it == pos2.end())
            missing.push_back(p1.objects[i]);
        else
            label2[i] = p2.labels[it->second];
    }
    if (!missing.empty() || p1.size() != p2.size()) {
        std::set<std::string> s1(p1.objects.begin(), p1.objects.end());
        for (const auto& o : p2.objects)
            if (!s1.count(o)) missing.push_back(o);
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        throw input_error("partitions cover different objects: " + list);
    }

    // overlap[a][b] and the smallest object index in each intersection.
    std::vector<std::vector<std::size_t>> overlap(p1.k, std::vector<std::size_t>(p2.k, 0));
    std::vector<std::vector<std::size_t>> first(p1.k, std::vector<std::size_t>(p2.k, p1.size()));
    for (std::size_t i = 0; i < p1.size(); ++i) {
        std::size_t a = p1.labels[i], b = label2[i];
        if (overlap[a][b]++ == 0) first[a][b] = i;
    }
    PartitionComparison out;
    std::vector<bool> used1(p1.k, false), used2(p2.k, false);
    while (true) {
        std::size_t ba = p1.k, bb = p2.k;
        for (std::size_t a = 0; a < p1.k; ++a) {
            if (used1[a]) continue;
            for (std::size_t b = 0; b < p2.k; ++b) {
                if (used2[b] || overlap[a][b] == 0) continue;
                if (ba == p1.k || overlap[a][b] > overlap[ba][bb] ||
                    (overlap[a][b] == overlap[ba][bb] && first[a][b] < first[ba][bb]))
                    ba = a, bb = b;
            }
        }
        if (ba == p1.k) break;
        used1[ba] = used2[bb] = true;
        out.matches.push_back({ba, bb, overlap[ba][bb]});
    }
    std::vector<std::size_t> match_of(p1.k, p2.k);
    for (const auto& m : out.matches) match_of[m.first] = m.second;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (match_of[p1.labels[i]] != label2[i]) {
            out.disagreement.push_back(i);
            out.disagreement_names.push_back(p1.objects[i]);
        }
    }
    return out;
}

ReferenceClusters ReferenceClusters::parse(std::istream& in, const std::string& origin) {
    ReferenceClusters r;
    enum class Section { none, cluster, ahc, kmeans } section = Section::none;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = origin + ":" + std::to_string(lineno) + ": ";
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw input_error(where + "unterminated section header");
            std::string name = trim(t.substr(1, t.size() - 2));
            if (name == "ahc") {
                section = Section::ahc;
            } else if (name == "kmeans") {
                section = Section::kmeans;
            } else {
                if (name.empty()) throw input_error(where + "empty section name");
                if (std::find(r.cluster_names.begin(), r.cluster_names.end(), name) != r.cluster_names.end())
                    throw input_error(where + "duplicate cluster '" + name + "'");
                section = Section::cluster;
                r.cluster_names.push_back(name);
                r.clusters.emplace_back();
            }
            continue;
        }
        switch (section) {
        case Section::none: throw input_error(where + "member outside any section");
        case Section::cluster:
            if (!seen.insert(t).second) throw input_error(where + "'" + t + "' listed twice");
            r.clusters.back().push_back(t);
            break;
        case Section::ahc:
        case Section::kmeans: {
            auto eq = t.find('=');
            if (eq == std::string::npos) throw input_error(where + "expected 'name = cluster'");
            std::string name = trim(t.substr(0, eq)), cluster = trim(t.substr(eq + 1));
            if (std::find(r.cluster_names.begin(), r.cluster_names.end(), cluster) == r.cluster_names.end())
                throw input_error(where + "unknown cluster '" + cluster + "'");
            if (seen.count(name)) throw input_error(where + "'" + name + "' already belongs to a cluster");
            (section == Section::ahc ? r.ahc_extra : r.kmeans_extra).emplace_back(name, cluster);
            break;
        }
        }
    }
    auto names_of = [](const std::vector<std::pair<std::string, std::string>>& v) {
        std::set<std::string> s;
        for (const auto& [n, _] : v) s.insert(n);
        return s;
    };
    if (names_of(r.ahc_extra) != names_of(r.kmeans_extra))
        throw input_error(origin + ": [ahc] and [kmeans] must place the same measures");
    if (names_of(r.ahc_extra).size() != r.ahc_extra.size())
        throw input_error(origin + ": a measure is placed twice in [ahc] or [kmeans]");
    return r;
}

ReferenceClusters ReferenceClusters::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("reference clusters not found: " + path);
    return parse(in, path);
}

std::string default_reference_path() { return std::string(FCAIM_DATA_DIR) + "/reference_clusters.txt"; }

ReferenceClusters ReferenceClusters::load_default() { return load(default_reference_path()); }

namespace {

Partition assemble(const ReferenceClusters& r, const std::vector<std::pair<std::string, std::string>>* extra,
                   Method method) {
    Partition p;
    p.method = method;
    p.cluster_names = r.cluster_names;
    p.k = r.cluster_names.size();
    for (std::size_t c = 0; c < r.clusters.size(); ++c)
        for (const auto& m : r.clusters[c]) {
            p.objects.push_back(m);
            p.labels.push_back(c);
        }
    if (extra)
        for (const auto& [name, cluster] : *extra) {
            p.objects.push_back(name);
            p.labels.push_back(static_cast<std::size_t>(
                std::find(r.cluster_names.begin(), r.cluster_names.end(), cluster) - r.cluster_names.begin()));
        }
    p.validate();
    return p;
}

}  // namespace

Partition ReferenceClusters::core() const { return assemble(*this, nullptr, Method::reference); }
Partition ReferenceClusters::ahc() const { return assemble(*this, &ahc_extra, Method::ahc); }
Partition ReferenceClusters::kmeans() const { return assemble(*this, &kmeans_extra, Method::kmeans); }

}  // namespace fcaim
