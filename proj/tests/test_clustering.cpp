#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fcaim/clustering.hpp"
#include "fcaim/contingency.hpp"
#include "fcaim/pipeline.hpp"
#include "fcaim/properties.hpp"
#include "oracles.hpp"

using namespace fcaim;

namespace {

Rows random_rows(std::mt19937& rng, std::size_t n, std::size_t dim) {
    std::normal_distribution<double> d(0, 1);
    Rows r(n, std::vector<double>(dim));
    for (auto& row : r)
        for (auto& v : row) v = d(rng);
    return r;
}

std::set<std::set<std::string>> blocks(const Partition& p) {
    std::set<std::set<std::string>> out;
    for (const auto& c : p.clusters()) {
        std::set<std::string> b;
        for (auto i : c) b.insert(p.objects.empty() ? std::to_string(i) : p.objects[i]);
        out.insert(b);
    }
    return out;
}

}  // namespace

TEST_CASE("one-dimensional Ward example") {
    auto d = ahc_ward({{0}, {1}, {5}, {6}});
    REQUIRE(d.merges.size() == 3);
    CHECK(d.merges[0].left == 0);
    CHECK(d.merges[0].right == 1);
    CHECK(d.merges[0].height == doctest::Approx(1.0));
    CHECK(d.merges[1].left == 2);
    CHECK(d.merges[1].right == 3);
    CHECK(d.merges[1].height == doctest::Approx(1.0));
    CHECK(d.merges[2].left == 4);
    CHECK(d.merges[2].right == 5);
    // Two groups of 2 with centers 0.5 and 5.5: 2 * (2*2/4) * 25 = 50.
    CHECK(d.merges[2].height == doctest::Approx(std::sqrt(50.0)));
    auto p = cut_dendrogram(d, 2);
    CHECK(p.labels == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("identical rows merge at height zero") {
    auto d = ahc_ward({{1, 1}, {1, 1}, {1, 1}});
    for (const auto& m : d.merges) CHECK(m.height == 0.0);
    CHECK(d.merges[0].left == 0);
    CHECK(d.merges[0].right == 1);
    CHECK(d.merges[1].left == 2);
    CHECK(d.merges[1].right == 3);
}

TEST_CASE("Ward matches the exhaustive ESS oracle") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + rng() % 11;
        Rows rows = trial % 3 == 0 ? Rows{} : random_rows(rng, n, 1 + rng() % 4);
        if (trial % 3 == 0) {
            // Binary rows produce many ties.
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<double> r(5);
                for (auto& v : r) v = static_cast<double>(rng() % 2);
                rows.push_back(r);
            }
        }
        auto d = ahc_ward(rows);
        auto expect = oracle::exhaustive_ward(rows);
        REQUIRE(d.merges.size() == expect.size());
        for (std::size_t s = 0; s < expect.size(); ++s) {
            INFO("trial " << trial << " step " << s);
            CHECK(d.merges[s].left == expect[s].left);
            CHECK(d.merges[s].right == expect[s].right);
            CHECK(d.merges[s].id == n + s);
            CHECK(d.merges[s].height == doctest::Approx(std::sqrt(2 * std::max(0.0, expect[s].delta_ess))).epsilon(1e-9));
        }
        for (std::size_t s = 1; s < d.merges.size(); ++s)
            CHECK(d.merges[s].height >= d.merges[s - 1].height - 1e-9);
    }
}

TEST_CASE("dendrogram cut") {
    std::mt19937 rng(2);
    auto rows = random_rows(rng, 10, 3);
    auto d = ahc_ward(rows);
    CHECK(cut_dendrogram(d, 1).k == 1);
    auto all = cut_dendrogram(d, 10);
    CHECK(all.k == 10);
    std::vector<std::size_t> id(10);
    std::iota(id.begin(), id.end(), 0);
    CHECK(all.labels == id);
    for (std::size_t k = 1; k <= 10; ++k) {
        auto p = cut_dendrogram(d, k);
        p.validate();
        CHECK(p.k == k);
        CHECK(p.labels[0] == 0);
    }
    CHECK_THROWS_AS(cut_dendrogram(d, 0), input_error);
    CHECK_THROWS_AS(cut_dendrogram(d, 11), input_error);
    CHECK_THROWS_AS(ahc_ward({}), input_error);
    CHECK_THROWS_AS(ahc_ward({{1, 2}, {1}}), input_error);
}

TEST_CASE("k-means basics") {
    Rows rows{{0, 0}, {0, 1}, {10, 10}, {10, 11}, {0, 0.5}};
    auto one = kmeans(rows, 1, 0);
    CHECK(one.partition.k == 1);
    CHECK(one.centroids[0][0] == doctest::Approx(4.0));
    auto two = kmeans(rows, 2, 3);
    CHECK(two.partition.labels == std::vector<std::size_t>{0, 0, 1, 1, 0});
    CHECK_THROWS_AS(kmeans(rows, 6, 0), input_error);
    CHECK_THROWS_AS(kmeans({{1}, {1}, {1}}, 2, 0), input_error);
    CHECK_THROWS_AS(kmeans(rows, 0, 0), input_error);
}

TEST_CASE("k-means objective never increases and is deterministic") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 5 + rng() % 30, k = 1 + rng() % 5;
        auto rows = random_rows(rng, n, 3);
        unsigned long seed = rng();
        auto r = kmeans(rows, k, seed);
        r.partition.validate();
        CHECK(r.partition.k == k);
        for (std::size_t i = 1; i < r.objective.size(); ++i) CHECK(r.objective[i] <= r.objective[i - 1] + 1e-9);
        CHECK(r.iterations <= 300);
        CHECK(kmeans(rows, k, seed).partition.labels == r.partition.labels);
    }
}

TEST_CASE("partition comparison") {
    auto a = Partition::from_labels(Method::ahc, {0, 0, 1, 1, 2}, {"a", "b", "c", "d", "e"});
    auto b = Partition::from_labels(Method::kmeans, {0, 0, 1, 2, 2}, {"a", "b", "c", "d", "e"});
    // {a,b} pairs first; the overlap-1 tie goes to the pair holding c, then {e}.
    auto cmp = compare_partitions(a, b);
    CHECK(cmp.matches.size() == 3);
    CHECK(cmp.disagreement_names == std::vector<std::string>{"d"});
    CHECK(compare_partitions(b, a).disagreement_names == std::vector<std::string>{"d"});
    CHECK(compare_partitions(a, a).disagreement.empty());

    // Names align objects regardless of row order.
    auto shuffled = Partition::from_labels(Method::kmeans, {0, 1, 1, 2, 2}, {"e", "c", "d", "a", "b"});
    CHECK(compare_partitions(a, shuffled).disagreement.empty());

    auto other = Partition::from_labels(Method::kmeans, {0, 0, 1, 1, 2}, {"a", "b", "c", "d", "z"});
    CHECK_THROWS_AS(compare_partitions(a, other), input_error);
}

TEST_CASE("partition CSV round trip") {
    auto p = Partition::from_labels(Method::ahc, {2, 2, 0, 1}, {"x", "y,z", "w", "v"});
    CHECK(p.labels == std::vector<std::size_t>{0, 0, 1, 2});
    std::ostringstream out;
    p.write_csv(out);
    std::istringstream in(out.str());
    auto back = Partition::read_csv(in);
    CHECK(back.objects == p.objects);
    CHECK(blocks(back) == blocks(p));
}

TEST_CASE("reference fixture disagreement is the six floating measures") {
    auto ref = ReferenceClusters::load_default();
    CHECK(ref.clusters.size() == 9);
    auto cmp = compare_partitions(ref.ahc(), ref.kmeans());
    std::set<std::string> got(cmp.disagreement_names.begin(), cmp.disagreement_names.end());
    CHECK(got == std::set<std::string>{"recall", "interest", "informational gain", "Gini", "mutual information",
                                       "fukuda"});
    CHECK(ref.core().size() + 6 == ref.ahc().size());
}

TEST_CASE("clustering is invariant under object permutation") {
    auto cat = Catalog::load_default();
    auto m = build_matrix(cat, SamplingGrid{});
    std::vector<std::size_t> all(m.size());
    std::iota(all.begin(), all.end(), 0);
    auto rows = clustering_rows(m, all);
    // Keep one representative per distinct row so no ties remain.
    Rows distinct;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (std::find(distinct.begin(), distinct.end(), rows[i]) == distinct.end()) {
            distinct.push_back(rows[i]);
            names.push_back(m.measures[i]);
        }
    // Add a tiny deterministic jitter to break equal-distance ties.
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> jitter(-1e-3, 1e-3);
    for (auto& r : distinct)
        for (auto& v : r) v += jitter(rng);

    auto base = cut_dendrogram(ahc_ward(distinct), 5, names);
    std::vector<std::size_t> perm(distinct.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        Rows pr;
        std::vector<std::string> pn;
        for (auto i : perm) {
            pr.push_back(distinct[i]);
            pn.push_back(names[i]);
        }
        CHECK(blocks(cut_dendrogram(ahc_ward(pr), 5, pn)) == blocks(base));
    }
}
