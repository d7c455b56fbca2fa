#include <set>
#include <sstream>

#include "doctest.h"
#include "fcaim/catalog.hpp"
#include "fcaim/clustering.hpp"

using namespace fcaim;

namespace {

Catalog parse(const std::string& text) {
    std::istringstream in(text);
    return Catalog::parse(in, "test");
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const input_error& e) {
        return e.what();
    }
    return "";
}

const char* kFullVector =
    "[P3=1 P4=1 P5=1 P6=1 P7=1 P8=0 P9=0 P10=0 P11=1 P12=0 P13=0 P14=concave P15=0 P16=0 P17=0 P18=0 P19=1 P20=0 "
    "P21=0]";

}  // namespace

TEST_CASE("default catalog holds the 61 clustered measures") {
    Catalog c = Catalog::load_default();
    CHECK(c.size() == 61);
    std::set<std::string> names;
    for (const auto& n : c.names()) names.insert(n);
    CHECK(names.size() == 61);

    auto ref = ReferenceClusters::load_default();
    std::set<std::string> expected;
    for (const auto& cl : ref.clusters) expected.insert(cl.begin(), cl.end());
    for (const auto& [name, _] : ref.ahc_extra) expected.insert(name);
    CHECK(expected.size() == 61);
    CHECK(names == expected);
    for (const char* floating : {"Gini", "mutual information", "fukuda", "informational gain", "interest", "recall"})
        CHECK(names.count(floating));
}

TEST_CASE("default catalog is mostly computable and the probabilistic family is declared-only") {
    Catalog c = Catalog::load_default();
    std::size_t computable = 0;
    for (const auto& d : c.entries()) computable += d.computable();
    CHECK(computable >= 45);
    for (const char* name : {"II", "IIE", "IIER", "IPEE", "IP3E", "likelihood link index", "VT100"}) {
        INFO(name);
        CHECK_FALSE(c.at(name).computable());
        CHECK(c.at(name).declared.has_value());
    }
    CHECK(c.at("IPEE").declared->get(11));
}

TEST_CASE("every computable measure is defined on the interior table (100, 40, 50, 25)") {
    Catalog c = Catalog::load_default();
    ContingencyTable t(100, 40, 50, 25);
    for (const auto& d : c.entries()) {
        if (!d.computable()) continue;
        INFO(d.name);
        auto e = eval_measure(d, t);
        CHECK(e.defined());
    }
}

TEST_CASE("aliases resolve to their canonical entries") {
    Catalog c = Catalog::load_default();
    CHECK(c.index_of("Czekanowski-Dice") == c.index_of("F-measure"));
    CHECK(c.index_of("lift") == c.index_of("interest"));
    CHECK(c.index_of("Piatetsky-Shapiro") == c.index_of("Piatetsky"));
    CHECK(c.index_of("Accuracy") == c.index_of("precision"));
    CHECK(c.index_of("confidence") == c.index_of("Confidence"));
    CHECK_THROWS_AS(c.index_of("no such measure"), input_error);
}

TEST_CASE("eval_measure refuses declared-only entries") {
    Catalog c = Catalog::load_default();
    CHECK_THROWS_AS(eval_measure(c.at("II"), ContingencyTable(100, 40, 50, 25)), not_computable);
}

TEST_CASE("catalog validation errors") {
    CHECK(error_of("Jaccard := pxy\nJaccard := pxy / px\n").find("duplicate measure name 'Jaccard'") !=
          std::string::npos);
    CHECK(error_of("IPEE :declared\n").find("missing its property vector") != std::string::npos);
    CHECK(error_of("IPEE\n").find("test:1:") != std::string::npos);
    CHECK(error_of("X := pxy +\n").find("malformed expression") != std::string::npos);
    CHECK(error_of("X := qq\n").find("unknown identifier 'qq'") != std::string::npos);
    CHECK(error_of("X :declared [P3=1]\n").find("missing P4") != std::string::npos);
    CHECK(error_of("X := pxy [P3=1]\n").find("only set P19") != std::string::npos);
    CHECK(error_of("X :alias Y\n").find("unknown measure 'Y'") != std::string::npos);
}

TEST_CASE("catalog line forms") {
    Catalog c = parse(std::string("# comment\nmy measure := pxy / px [P19=1]\nIPEE :declared ") + kFullVector +
                      "\nother name :alias my measure\n");
    REQUIRE(c.size() == 2);
    CHECK(c[0].name == "my measure");
    CHECK(c[0].random_antecedent);
    CHECK(c[0].source == "pxy / px");
    CHECK(c[1].declared->shape == Shape::concave);
    CHECK(c.index_of("other name") == 0);
    CHECK(format_declared_vector(*c[1].declared) == kFullVector);
}

TEST_CASE("missing catalog file") {
    try {
        Catalog::load("/nonexistent/measures.cat");
        FAIL("expected an error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("catalog not found") != std::string::npos);
    }
}
