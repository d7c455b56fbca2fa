#include <random>
#include <sstream>

#include "doctest.h"
#include "fcaim/lattice.hpp"
#include "oracles.hpp"

using namespace fcaim;

namespace {

FormalContext make(const std::vector<std::string>& rows) {
    std::vector<std::string> objects, attributes;
    std::size_t m = rows.empty() ? 0 : rows[0].size();
    for (std::size_t g = 0; g < rows.size(); ++g) objects.push_back("g" + std::to_string(g + 1));
    for (std::size_t j = 0; j < m; ++j) attributes.push_back("m" + std::to_string(j + 1));
    std::vector<Bitset> bits;
    for (const auto& r : rows) {
        Bitset b(m);
        for (std::size_t j = 0; j < m; ++j)
            if (r[j] == 'X') b.set(j);
        bits.push_back(b);
    }
    return FormalContext(objects, attributes, bits);
}

bool lectic_less(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.test(i) != b.test(i)) return b.test(i);
    return false;
}

}  // namespace

TEST_CASE("identity context") {
    ConceptLattice l(make({"X..", ".X.", "..X"}));
    CHECK(l.size() == 5);
    CHECK(l.edge_count() == 6);
    CHECK(l[l.top()].extent.all());
    CHECK(l[l.top()].intent.none());
    CHECK(l[l.bottom()].extent.none());
    CHECK(l[l.bottom()].intent.all());
    for (std::size_t g = 0; g < 3; ++g) {
        CHECK(l.object_concept(g) == l.attribute_concept(g));
        CHECK(l.distance(l.object_concept(g), l.top()) == 1);
        CHECK(l.distance(l.object_concept(g), l.bottom()) == 1);
        for (std::size_t h = 0; h < 3; ++h)
            if (h != g) CHECK(l.distance(l.object_concept(g), l.object_concept(h)) == 2);
    }
}

TEST_CASE("contranominal 2x2") {
    ConceptLattice l(make({".X", "X."}));
    CHECK(l.size() == 4);
    CHECK(l.edge_count() == 4);
}

TEST_CASE("empty context") {
    ConceptLattice l(FormalContext({}, {}, {}));
    CHECK(l.size() == 1);
    CHECK(l.edge_count() == 0);
    CHECK(l.top() == l.bottom());
    ConceptLattice no_attrs(make({"", ""}));
    CHECK(no_attrs.size() == 1);
    ConceptLattice no_objects(FormalContext({}, {"a", "b"}, {}));
    CHECK(no_objects.size() == 1);
    CHECK(no_objects[0].intent.all());
}

TEST_CASE("chain context") {
    // Object i has attributes 1..i: a chain of 4 concepts.
    ConceptLattice l(make({"...", "X..", "XX.", "XXX"}));
    CHECK(l.size() == 4);
    CHECK(l.edge_count() == 3);
    for (std::size_t i = 0; i < l.size(); ++i) {
        CHECK(l.upper_covers(i).size() <= 1);
        CHECK(l.lower_covers(i).size() <= 1);
    }
    CHECK(l.distance(l.top(), l.bottom()) == 3);
}

TEST_CASE("object and attribute concepts") {
    auto ctx = make({"XX.", ".XX", "X.X", "XXX"});
    ConceptLattice l(ctx);
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        Bitset one(ctx.object_count());
        one.set(g);
        const auto& c = l[l.object_concept(g)];
        CHECK(c.intent == ctx.row(g));
        CHECK(c.extent == ctx.object_closure(one));
    }
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        const auto& c = l[l.attribute_concept(m)];
        CHECK(c.extent == ctx.column(m));
    }
    Bitset pair(4);
    pair.set(0).set(1);
    const auto& c = l[l.covering_concept(pair)];
    CHECK(c.extent == ctx.object_closure(pair));
    CHECK(c.intent == ctx.derive_objects(pair));
}

TEST_CASE("derivation operators") {
    auto ctx = make({"XX.", ".XX"});
    CHECK(ctx.derive_objects(ctx.empty_objects()).all());
    CHECK(ctx.derive_attributes(ctx.empty_attributes()).all());
    CHECK_THROWS_WITH_AS(ctx.object_index("zz"), "unknown object 'zz'", input_error);
    CHECK_THROWS_WITH_AS(ctx.attribute_index("zz"), "unknown attribute 'zz'", input_error);
    CHECK_THROWS_AS(FormalContext({"a", "a"}, {"m"}, {Bitset(1), Bitset(1)}), input_error);
    CHECK_THROWS_AS(FormalContext({"a"}, {"m"}, {Bitset(2)}), input_error);
    CHECK_THROWS_AS(FormalContext({"a", "b"}, {"m"}, {Bitset(1)}), input_error);
}

TEST_CASE("concepts and covers match brute force on random contexts") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = oracle::random_matrix(rng, 9, 8);
        std::size_t m = r.empty() ? std::uniform_int_distribution<std::size_t>(0, 8)(rng) : r[0].size();
        auto ctx = oracle::to_context(r, m);
        ConceptLattice l(ctx);
        auto expected = oracle::brute_concepts(r, m);
        std::set<std::pair<oracle::Set, oracle::Set>> got;
        for (const auto& c : l.concepts()) got.emplace(oracle::to_set(c.extent), oracle::to_set(c.intent));
        REQUIRE(got.size() == l.size());
        CHECK(got == expected);

        for (std::size_t i = 1; i < l.size(); ++i) CHECK(lectic_less(l[i - 1].intent, l[i].intent));

        std::set<std::pair<oracle::Set, oracle::Set>> covers;
        for (std::size_t i = 0; i < l.size(); ++i)
            for (auto j : l.upper_covers(i)) {
                covers.emplace(oracle::to_set(l[i].intent), oracle::to_set(l[j].intent));
                const auto& lj = l.lower_covers(j);
                CHECK(std::find(lj.begin(), lj.end(), i) != lj.end());
            }
        CHECK(covers == oracle::brute_covers(expected));
    }
}

TEST_CASE("Galois connection laws") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = oracle::random_matrix(rng, 10, 10);
        if (r.empty() || r[0].empty()) continue;
        std::size_t m = r[0].size();
        auto ctx = oracle::to_context(r, m);
        Bitset a(m), b(m);
        for (std::size_t j = 0; j < m; ++j) {
            if (rng() % 2) a.set(j);
            if (rng() % 2) b.set(j);
        }
        Bitset ab = a;
        ab |= b;
        CHECK(ctx.derive_attributes(ab).is_subset_of(ctx.derive_attributes(a)));
        CHECK(a.is_subset_of(ctx.closure(a)));
        CHECK(ctx.closure(ctx.closure(a)) == ctx.closure(a));
        CHECK(ctx.derive_attributes(ctx.closure(a)) == ctx.derive_attributes(a));
        CHECK(oracle::to_set(ctx.derive_attributes(a)) == oracle::derive_attributes(r, oracle::to_set(a)));
    }
}

TEST_CASE("distances form a metric on the cover graph") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        auto r = oracle::random_matrix(rng, 8, 7);
        std::size_t m = r.empty() ? 0 : r[0].size();
        ConceptLattice l(oracle::to_context(r, m));
        std::vector<std::vector<std::size_t>> d;
        for (std::size_t i = 0; i < l.size(); ++i) d.push_back(l.distances_from(i));
        for (std::size_t i = 0; i < l.size(); ++i) {
            CHECK(d[i][i] == 0);
            for (std::size_t j = 0; j < l.size(); ++j) {
                CHECK(d[i][j] == d[j][i]);
                if (i != j) CHECK(d[i][j] >= 1);
                for (std::size_t k = 0; k < l.size(); k += 3) CHECK(d[i][j] <= d[i][k] + d[k][j]);
            }
            for (auto j : l.upper_covers(i)) CHECK(d[i][j] == 1);
        }
    }
}

TEST_CASE("CXT round trip is byte-identical") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        auto r = oracle::random_matrix(rng, 12, 12);
        auto ctx = oracle::to_context(r, r.empty() ? 3 : r[0].size());
        std::string once = ctx.to_cxt();
        auto back = FormalContext::parse_cxt(once);
        CHECK(back.to_cxt() == once);
        CHECK(back.objects() == ctx.objects());
        CHECK(back.attributes() == ctx.attributes());
    }
    auto ctx = make({"X.", ".X"});
    CHECK(ctx.to_cxt() == "B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\n.X\n");
    CHECK(FormalContext::parse_cxt("B\r\n\r\n1\r\n1\r\n\r\na\r\nm\r\nX\r\n").incidence(0, 0));
}

TEST_CASE("malformed CXT") {
    CHECK_THROWS_AS(FormalContext::parse_cxt(""), input_error);
    CHECK_THROWS_AS(FormalContext::parse_cxt("A\n\n1\n1\n\na\nm\nX\n"), input_error);
    CHECK_THROWS_AS(FormalContext::parse_cxt("B\n\nx\n1\n\na\nm\nX\n"), input_error);
    CHECK_THROWS_AS(FormalContext::parse_cxt("B\n\n1\n1\n\na\nm\nXX\n"), input_error);
    CHECK_THROWS_AS(FormalContext::parse_cxt("B\n\n1\n1\n\na\nm\nY\n"), input_error);
    CHECK_THROWS_AS(FormalContext::parse_cxt("B\n\n2\n1\n\na\nb\nm\nX\n"), input_error);
}
