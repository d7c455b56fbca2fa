#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fcaim/validation.hpp"
#include "oracles.hpp"

using namespace fcaim;

namespace {

// rows: object name -> attribute letters it has (attributes a..z by letter).
FormalContext context(const std::vector<std::pair<std::string, std::string>>& rows, std::size_t attributes) {
    std::vector<std::string> objects, attrs;
    std::vector<Bitset> bits;
    for (std::size_t m = 0; m < attributes; ++m) attrs.push_back(std::string(1, static_cast<char>('a' + m)));
    for (const auto& [name, has] : rows) {
        objects.push_back(name);
        Bitset b(attributes);
        for (char c : has) b.set(static_cast<std::size_t>(c - 'a'));
        bits.push_back(b);
    }
    return FormalContext(objects, attrs, bits);
}

Membership membership(const FormalContext& ctx, const std::vector<std::vector<std::string>>& clusters) {
    std::vector<std::string> objects;
    std::vector<std::size_t> labels;
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (const auto& o : clusters[c]) {
            objects.push_back(o);
            labels.push_back(c);
        }
    Partition p;
    p.method = Method::reference;
    p.objects = objects;
    p.labels = labels;
    p.k = clusters.size();
    return Membership::align(ctx, p);
}

int rank(ClusterVerdict v) {
    return v == ClusterVerdict::validated ? 2 : v == ClusterVerdict::hardly_validated ? 1 : 0;
}

}  // namespace

TEST_CASE("classification rule") {
    CHECK(classify(2, 0.8, true) == ClusterVerdict::validated);
    CHECK(classify(2, 0.79, true) == ClusterVerdict::hardly_validated);
    CHECK(classify(1, 1.0, true) == ClusterVerdict::hardly_validated);
    CHECK(classify(1, 0.4, true) == ClusterVerdict::hardly_validated);
    CHECK(classify(1, 0.39, true) == ClusterVerdict::questionable);
    CHECK(classify(0, 1.0, true) == ClusterVerdict::questionable);
    CHECK(classify(5, 1.0, false) == ClusterVerdict::questionable);
    CHECK(verdict_name(ClusterVerdict::hardly_validated) == "hardly-validated");
    ValidationThresholds bad;
    bad.validated_cohesion = 1.5;
    CHECK_THROWS_AS(bad.validate(), input_error);
}

TEST_CASE("validated cluster") {
    auto ctx = context({{"a", "ab"}, {"b", "ab"}, {"c", "abd"}, {"d", "c"}}, 4);
    ConceptLattice l(ctx);
    GammaDistances gd(l);
    auto m = membership(ctx, {{"a", "b", "c"}, {"d"}});
    auto v = validate_cluster(l, gd, 0, m);
    CHECK(v.intent_size == 2);
    CHECK(v.cohesion == doctest::Approx(1.0));
    CHECK(v.intruders.empty());
    CHECK(v.verdict == ClusterVerdict::validated);
    // c's object concept sits below those of a and b and groups only c.
    CHECK(v.center == 0);
    CHECK(v.center_coverage == 3);
    CHECK(split_suggestion(l, gd, 0, m) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
}

TEST_CASE("hardly validated with an explained intruder") {
    auto ctx = context({{"a", "ab"}, {"b", "ac"}, {"c", "ade"}, {"e", "de"}}, 5);
    ConceptLattice l(ctx);
    GammaDistances gd(l);
    auto m = membership(ctx, {{"a", "b"}, {"c", "e"}});
    auto v = validate_cluster(l, gd, 0, m);
    CHECK(v.intent_size == 1);
    CHECK(v.cohesion == doctest::Approx(2.0 / 3.0));
    REQUIRE(v.intruders.size() == 1);
    CHECK(v.intruders[0].object == 2);
    CHECK(v.intruders[0].d_cluster == doctest::Approx(2.0));
    CHECK(v.intruders[0].min_d_cluster == 2);
    CHECK(v.intruders[0].d_own == doctest::Approx(1.0));
    CHECK(v.intruders[0].explained);
    CHECK(v.verdict == ClusterVerdict::hardly_validated);
    CHECK(validate_cluster(l, gd, 1, m).verdict == ClusterVerdict::validated);
}

TEST_CASE("unexplained intruder makes a cluster questionable") {
    auto ctx = context({{"a", "ab"}, {"b", "ab"}, {"c", "abf"}, {"x", "g"}, {"y", "c"}}, 7);
    ConceptLattice l(ctx);
    GammaDistances gd(l);
    auto m = membership(ctx, {{"a", "b"}, {"c", "x"}, {"y"}});
    auto v = validate_cluster(l, gd, 0, m);
    CHECK(v.intent_size == 2);
    REQUIRE(v.intruders.size() == 1);
    CHECK(v.intruders[0].d_cluster == doctest::Approx(1.0));
    CHECK(v.intruders[0].d_own == doctest::Approx(2.0));
    CHECK_FALSE(v.intruders[0].explained);
    CHECK(v.verdict == ClusterVerdict::questionable);
}

TEST_CASE("floating intruders do not count against the verdict") {
    auto ctx = context({{"a", "ab"}, {"b", "ab"}, {"c", "ab"}, {"d", "c"}}, 3);
    ConceptLattice l(ctx);
    GammaDistances gd(l);
    auto m = membership(ctx, {{"a", "b"}, {"d"}});
    auto v = validate_cluster(l, gd, 0, m);
    REQUIRE(v.intruders.size() == 1);
    CHECK_FALSE(v.intruders[0].own);
    CHECK(v.cohesion == doctest::Approx(2.0 / 3.0));
    CHECK(v.verdict == ClusterVerdict::hardly_validated);
}

TEST_CASE("floating assignment") {
    auto ctx = context({{"a", "ab"}, {"b", "ac"}, {"c", "ade"}, {"e", "de"}}, 5);
    ConceptLattice l(ctx);
    GammaDistances gd(l);
    auto m = membership(ctx, {{"a", "b"}, {"c"}});
    CHECK(m.floating() == std::vector<std::size_t>{3});
    auto r = assign_floating(gd, 3, m);
    REQUIRE(r.assigned);
    CHECK(*r.assigned == 1);
    CHECK(r.mean_distance[1] == doctest::Approx(1.0));
    CHECK(r.mean_distance[0] == doctest::Approx(3.0));
    CHECK_THROWS_AS(assign_floating(gd, 0, m), input_error);

    auto sym = context({{"a", "a"}, {"b", "b"}, {"f", ""}}, 2);
    ConceptLattice ls(sym);
    GammaDistances gs(ls);
    auto ms = membership(sym, {{"a"}, {"b"}});
    auto u = assign_floating(gs, 2, ms);
    CHECK_FALSE(u.assigned);
    CHECK(u.reason.find("unresolved") != std::string::npos);
}

TEST_CASE("floating assignment is invariant under object permutation") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        auto r = oracle::random_matrix(rng, 10, 6);
        if (r.size() < 4 || r[0].empty()) continue;
        std::size_t n = r.size(), mcount = r[0].size();
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        oracle::Matrix pr;
        for (auto i : perm) pr.push_back(r[i]);
        auto base = oracle::to_context(r, mcount);
        // Name objects by original index in both contexts.
        std::vector<std::string> pnames;
        std::vector<Bitset> prow;
        for (auto i : perm) {
            pnames.push_back(base.objects()[i]);
            prow.push_back(base.row(i));
        }
        FormalContext permuted(pnames, base.attributes(), prow);
        std::vector<std::vector<std::string>> clusters(2);
        for (std::size_t g = 0; g + 1 < n; ++g) clusters[g % 2].push_back(base.objects()[g]);
        std::string floating = base.objects()[n - 1];

        ConceptLattice l1(base), l2(permuted);
        GammaDistances g1(l1), g2(l2);
        auto m1 = membership(base, clusters), m2 = membership(permuted, clusters);
        auto a1 = assign_floating(g1, base.object_index(floating), m1);
        auto a2 = assign_floating(g2, permuted.object_index(floating), m2);
        CHECK(a1.assigned == a2.assigned);
        CHECK(a1.mean_distance == a2.mean_distance);
    }
}

TEST_CASE("split suggestions") {
    auto ctx = context({{"a", "ab"}, {"b", "ab"}, {"c", "cd"}, {"d", "cd"}, {"e", "e"}}, 5);
    ConceptLattice l(ctx);
    GammaDistances gd(l);
    auto m = membership(ctx, {{"a", "b", "c", "d"}, {"e"}});
    CHECK(validate_cluster(l, gd, 0, m).verdict == ClusterVerdict::questionable);
    CHECK(split_suggestion(l, gd, 0, m) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});

    auto m2 = membership(ctx, {{"a", "c"}, {"b", "d", "e"}});
    CHECK(split_suggestion(l, gd, 0, m2) == std::vector<std::vector<std::size_t>>{{0}, {2}});
}

TEST_CASE("covering concept is minimal and cohesion is bounded") {
    std::mt19937 rng(29);
    int checked = 0;
    while (checked < 200) {
        auto r = oracle::random_matrix(rng, 10, 7);
        if (r.empty()) continue;
        std::size_t mcount = r[0].size();
        auto ctx = oracle::to_context(r, mcount);
        ConceptLattice l(ctx);
        std::vector<std::size_t> cluster;
        for (std::size_t g = 0; g < r.size(); ++g)
            if (rng() % 2) cluster.push_back(g);
        if (cluster.empty()) continue;
        ++checked;
        Bitset set(r.size());
        for (auto g : cluster) set.set(g);
        const auto& cov = l[covering_concept(l, cluster)];
        CHECK(set.is_subset_of(cov.extent));
        for (const auto& c : l.concepts())
            if (set.is_subset_of(c.extent)) CHECK(cov.extent.is_subset_of(c.extent));
        std::vector<std::vector<std::string>> clusters{{}};
        for (auto g : cluster) clusters[0].push_back(ctx.objects()[g]);
        GammaDistances gd(l);
        auto v = validate_cluster(l, gd, 0, membership(ctx, clusters));
        CHECK(v.cohesion > 0);
        CHECK(v.cohesion <= 1);
        CHECK((v.cohesion == 1.0) == (cov.extent == set));
        CHECK(v.intruders.size() == cov.extent.count() - cluster.size());
    }
    CHECK_THROWS_AS(covering_concept(ConceptLattice(FormalContext({"a"}, {"m"}, {Bitset(1)})), {}), input_error);
}

TEST_CASE("an attribute exclusive to a cluster never worsens its verdict") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        auto r = oracle::random_matrix(rng, 9, 6);
        if (r.size() < 3 || r[0].empty()) continue;
        std::size_t mcount = r[0].size();
        std::vector<std::size_t> labels(r.size());
        for (auto& x : labels) x = rng() % 2;
        labels[0] = 0;
        labels[1] = 1;
        std::vector<std::vector<std::string>> clusters(2);
        for (std::size_t g = 0; g < r.size(); ++g) clusters[labels[g]].push_back("g" + std::to_string(g + 1));

        auto before = oracle::to_context(r, mcount);
        auto widened = r;
        for (std::size_t g = 0; g < r.size(); ++g) widened[g].push_back(labels[g] == 0);
        auto after = oracle::to_context(widened, mcount + 1);

        ConceptLattice lb(before), la(after);
        GammaDistances gb(lb), ga(la);
        auto vb = validate_cluster(lb, gb, 0, membership(before, clusters));
        auto va = validate_cluster(la, ga, 0, membership(after, clusters));
        CHECK(rank(va.verdict) >= rank(vb.verdict));
        if (vb.verdict == ClusterVerdict::validated) CHECK(va.verdict == ClusterVerdict::validated);
        CHECK(va.cohesion == doctest::Approx(1.0));
    }
}

TEST_CASE("membership alignment") {
    auto ctx = context({{"a", "a"}, {"b", "b"}}, 2);
    Partition p;
    p.objects = {"a", "zz", "yy"};
    p.labels = {0, 0, 0};
    p.k = 1;
    CHECK_THROWS_WITH_AS(Membership::align(ctx, p), doctest::Contains("'zz', 'yy'"), input_error);
}

TEST_CASE("report output") {
    auto ctx = context({{"a", "ab"}, {"b", "ac"}, {"c", "ade"}, {"e", "de"}}, 5);
    ConceptLattice l(ctx);
    auto m = membership(ctx, {{"a", "b"}, {"c"}});
    auto rep = validate_partition(l, m);
    CHECK(rep.clusters.size() == 2);
    CHECK(rep.assignments.size() == 1);
    std::ostringstream csv, txt, asg;
    rep.write_csv(csv, l);
    rep.write_text(txt, l, m);
    rep.write_assignments_csv(asg, l, m);
    CHECK(csv.str().rfind("cluster,verdict,cohesion,intent_size,intent,intruders\n", 0) == 0);
    CHECK(txt.str().find("hardly-validated") != std::string::npos);
    CHECK(asg.str().find("e,") != std::string::npos);
}
