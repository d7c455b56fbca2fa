#include "fcaim/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "fcaim/textio.hpp"

namespace fcaim {

namespace {

std::string fixed(double v, int digits = 3) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

std::string join_names(const Bitset& s, const std::vector<std::string>& names, const char* sep) {
    std::string out;
    s.for_each([&](std::size_t i) { out += (out.empty() ? "" : sep) + names[i]; });
    return out;
}

std::string join_objects(const FormalContext& ctx, const std::vector<std::size_t>& objs, const char* sep) {
    std::string out;
    for (std::size_t g : objs) out += (out.empty() ? "" : sep) + ctx.objects()[g];
    return out;
}

Bitset as_set(const FormalContext& ctx, const std::vector<std::size_t>& cluster) {
    Bitset s = ctx.empty_objects();
    for (std::size_t g : cluster) s.set(g);
    return s;
}

}  // namespace

std::string_view verdict_name(ClusterVerdict v) {
    switch (v) {
    case ClusterVerdict::validated: return "validated";
    case ClusterVerdict::hardly_validated: return "hardly-validated";
    case ClusterVerdict::questionable: return "questionable";
    }
    return "?";
}

void ValidationThresholds::validate() const {
    auto in_unit = [](double v) { return v > 0 && v <= 1; };
    if (!in_unit(validated_cohesion) || !in_unit(hardly_cohesion))
        throw input_error("cohesion thresholds must lie in (0, 1]");
    if (hardly_cohesion > validated_cohesion) throw input_error("hardly-validated cohesion exceeds validated cohesion");
    if (hardly_intent > validated_intent) throw input_error("hardly-validated intent exceeds validated intent");
    if (!(tau >= 0 && tau < 1)) throw input_error("tau must lie in [0, 1)");
}

std::vector<std::size_t> Membership::members(std::size_t cluster) const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < label.size(); ++g)
        if (label[g] == cluster) out.push_back(g);
    return out;
}

std::vector<std::size_t> Membership::floating() const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < label.size(); ++g)
        if (!label[g]) out.push_back(g);
    return out;
}

Membership Membership::align(const FormalContext& ctx, const Partition& p) {
    p.validate();
    Membership m;
    m.label.assign(ctx.object_count(), std::nullopt);
    for (std::size_t c = 0; c < p.k; ++c) m.cluster_names.push_back(p.cluster_name(c));
    std::vector<std::string> unknown;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& names = ctx.objects();
        auto it = std::find(names.begin(), names.end(), p.objects[i]);
        if (it == names.end())
            unknown.push_back(p.objects[i]);
        else
            m.label[static_cast<std::size_t>(it - names.begin())] = p.labels[i];
    }
    if (!unknown.empty()) {
        std::string list;
        for (const auto& u : unknown) list += (list.empty() ? "'" : ", '") + u + "'";
        throw input_error("partition objects missing from the context: " + list);
    }
    return m;
}

GammaDistances::GammaDistances(const ConceptLattice& lattice) {
    const std::size_t n = lattice.context().object_count();
    d_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t g = 0; g < n; ++g) {
        auto from = lattice.distances_from(lattice.object_concept(g));
        for (std::size_t h = 0; h < n; ++h) d_[g][h] = from[lattice.object_concept(h)];
    }
}

double GammaDistances::mean(std::size_t g, const std::vector<std::size_t>& members) const {
    double sum = 0;
    std::size_t count = 0;
    for (std::size_t h : members) {
        if (h == g) continue;
        sum += static_cast<double>((*this)(g, h));
        ++count;
    }
    return count ? sum / static_cast<double>(count) : 0.0;
}

std::size_t GammaDistances::min(std::size_t g, const std::vector<std::size_t>& members) const {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t h : members)
        if (h != g) best = std::min(best, (*this)(g, h));
    return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

std::size_t covering_concept(const ConceptLattice& lattice, const std::vector<std::size_t>& cluster) {
    if (cluster.empty()) throw input_error("covering concept of an empty cluster");
    return lattice.covering_concept(as_set(lattice.context(), cluster));
}

std::vector<Intruder> intruder_analysis(const ConceptLattice& lattice, const GammaDistances& gd,
                                        const std::vector<std::size_t>& cluster, const Membership& membership) {
    const Concept& c = lattice[covering_concept(lattice, cluster)];
    Bitset outside = c.extent - as_set(lattice.context(), cluster);
    std::vector<Intruder> out;
    outside.for_each([&](std::size_t g) {
        Intruder in;
        in.object = g;
        in.own = membership.label.at(g);
        in.d_cluster = gd.mean(g, cluster);
        in.min_d_cluster = gd.min(g, cluster);
        if (in.own) {
            in.d_own = gd.mean(g, membership.members(*in.own));
            in.explained = in.d_own <= in.d_cluster;
        }
        out.push_back(in);
    });
    return out;
}

ClusterVerdict classify(std::size_t intent_size, double cohesion, bool intruders_explained,
                        const ValidationThresholds& th) {
    if (intruders_explained && intent_size >= th.validated_intent && cohesion >= th.validated_cohesion)
        return ClusterVerdict::validated;
    if (intruders_explained && intent_size >= th.hardly_intent && cohesion >= th.hardly_cohesion)
        return ClusterVerdict::hardly_validated;
    return ClusterVerdict::questionable;
}

ClusterValidation validate_cluster(const ConceptLattice& lattice, const GammaDistances& gd, std::size_t cluster,
                                   const Membership& membership, const ValidationThresholds& th) {
    ClusterValidation v;
    v.cluster = cluster;
    v.name = membership.cluster_names.at(cluster);
    v.members = membership.members(cluster);
    v.covering = covering_concept(lattice, v.members);
    const Concept& c = lattice[v.covering];
    v.intent_size = c.intent.count();
    v.cohesion = static_cast<double>(v.members.size()) / static_cast<double>(c.extent.count());
    v.intruders = intruder_analysis(lattice, gd, v.members, membership);

    Bitset member_set = as_set(lattice.context(), v.members);
    for (std::size_t g : v.members) {
        std::size_t cover = (lattice[lattice.object_concept(g)].extent & member_set).count();
        if (cover > v.center_coverage) v.center = g, v.center_coverage = cover;
    }
    bool explained = std::all_of(v.intruders.begin(), v.intruders.end(),
                                 [](const Intruder& i) { return !i.own || i.explained; });
    v.verdict = classify(v.intent_size, v.cohesion, explained, th);
    return v;
}

AssignmentResult assign_floating(const GammaDistances& gd, std::size_t object, const Membership& membership,
                                 const ValidationThresholds& th) {
    if (object >= membership.label.size()) throw input_error("unknown object index " + std::to_string(object));
    if (membership.label[object]) throw input_error("object already belongs to a cluster");
    AssignmentResult r;
    r.object = object;
    for (std::size_t c = 0; c < membership.k(); ++c) r.mean_distance.push_back(gd.mean(object, membership.members(c)));
    if (r.mean_distance.empty()) {
        r.reason = "no clusters";
        return r;
    }
    std::vector<std::size_t> order(r.mean_distance.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return r.mean_distance[a] < r.mean_distance[b]; });
    double d1 = r.mean_distance[order[0]];
    if (order.size() == 1) {
        r.assigned = order[0];
        r.reason = "only cluster";
        return r;
    }
    double d2 = r.mean_distance[order[1]];
    const std::string& n1 = membership.cluster_names[order[0]];
    const std::string& n2 = membership.cluster_names[order[1]];
    double gap = d2 > 0 ? (d2 - d1) / d2 : 0.0;
    if (d2 == 0 || gap < th.tau) {
        r.reason = "unresolved between " + n1 + " (" + fixed(d1) + ") and " + n2 + " (" + fixed(d2) +
                   "): relative gap " + fixed(gap) + " < " + fixed(th.tau);
    } else {
        r.assigned = order[0];
        r.reason = "nearest " + n1 + " (" + fixed(d1) + "), next " + n2 + " (" + fixed(d2) + ")";
    }
    return r;
}

std::vector<std::vector<std::size_t>> split_suggestion(const ConceptLattice& lattice, const GammaDistances& gd,
                                                       std::size_t cluster, const Membership& membership,
                                                       const ValidationThresholds& th) {
    auto v = validate_cluster(lattice, gd, cluster, membership, th);
    if (v.verdict == ClusterVerdict::validated) return {v.members};
    Bitset uncovered = as_set(lattice.context(), v.members);
    std::vector<std::vector<std::size_t>> blocks;
    while (uncovered.any()) {
        std::size_t best = lattice.size();
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            const Concept& c = lattice[i];
            if (c.extent.none() || !c.extent.is_subset_of(uncovered)) continue;
            if (best == lattice.size()) {
                best = i;
                continue;
            }
            const Concept& b = lattice[best];
            std::size_t ce = c.extent.count(), be = b.extent.count();
            if (ce > be || (ce == be && c.intent.count() > b.intent.count())) best = i;
        }
        if (best == lattice.size()) break;
        blocks.push_back(lattice[best].extent.indices());
        uncovered -= lattice[best].extent;
    }
    uncovered.for_each([&](std::size_t g) { blocks.push_back({g}); });
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

ValidationReport validate_partition(const ConceptLattice& lattice, const Membership& membership,
                                    const ValidationThresholds& th) {
    th.validate();
    GammaDistances gd(lattice);
    ValidationReport r;
    for (std::size_t c = 0; c < membership.k(); ++c) {
        if (membership.members(c).empty()) continue;
        r.clusters.push_back(validate_cluster(lattice, gd, c, membership, th));
        r.splits.push_back(split_suggestion(lattice, gd, c, membership, th));
    }
    for (std::size_t g : membership.floating()) r.assignments.push_back(assign_floating(gd, g, membership, th));
    return r;
}

void ValidationReport::write_text(std::ostream& out, const ConceptLattice& lattice, const Membership& m) const {
    const auto& ctx = lattice.context();
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        const auto& v = clusters[i];
        const Concept& c = lattice[v.covering];
        out << "cluster " << v.name << ": " << verdict_name(v.verdict) << "\n";
        out << "  members (" << v.members.size() << "): " << join_objects(ctx, v.members, ", ") << "\n";
        out << "  shared intent (" << v.intent_size << "): " << join_names(c.intent, ctx.attributes(), ", ")
            << "\n";
        out << "  cohesion: " << fixed(v.cohesion) << " (" << v.members.size() << " of " << c.extent.count() << ")\n";
        out << "  center: " << ctx.objects()[v.center] << " (object concept groups " << v.center_coverage << " of "
            << v.members.size() << ")\n";
        for (const auto& in : v.intruders) {
            out << "  intruder " << ctx.objects()[in.object] << ": d_cluster " << fixed(in.d_cluster) << " (min "
                << in.min_d_cluster << ")";
            if (in.own)
                out << ", d_own " << fixed(in.d_own) << " in " << m.cluster_names[*in.own] << " -> "
                    << (in.explained ? "explained" : "unexplained");
            else
                out << ", floating";
            out << "\n";
        }
        if (i < splits.size() && splits[i].size() > 1) {
            out << "  split suggestion:";
            for (const auto& b : splits[i]) out << " {" << join_objects(ctx, b, ", ") << "}";
            out << "\n";
        }
    }
    for (const auto& a : assignments) {
        out << "floating " << ctx.objects()[a.object] << ": "
            << (a.assigned ? "assigned to " + m.cluster_names[*a.assigned] : std::string("unresolved")) << " ("
            << a.reason << ")\n";
    }
}

void ValidationReport::write_csv(std::ostream& out, const ConceptLattice& lattice) const {
    const auto& ctx = lattice.context();
    out << "cluster,verdict,cohesion,intent_size,intent,intruders\n";
    for (const auto& v : clusters) {
        std::string intr;
        for (const auto& in : v.intruders) intr += (intr.empty() ? "" : ";") + ctx.objects()[in.object];
        write_csv_row(out, {v.name, std::string(verdict_name(v.verdict)), fixed(v.cohesion, 6),
                            std::to_string(v.intent_size),
                            join_names(lattice[v.covering].intent, ctx.attributes(), ";"), intr});
    }
}

void ValidationReport::write_assignments_csv(std::ostream& out, const ConceptLattice& lattice,
                                             const Membership& m) const {
    std::vector<std::string> header{"measure", "assigned"};
    for (const auto& n : m.cluster_names) header.push_back(n);
    write_csv_row(out, header);
    for (const auto& a : assignments) {
        std::vector<std::string> row{lattice.context().objects()[a.object],
                                     a.assigned ? m.cluster_names[*a.assigned] : "unresolved"};
        for (double d : a.mean_distance) row.push_back(fixed(d, 6));
        write_csv_row(out, row);
    }
}

}  // namespace fcaim
