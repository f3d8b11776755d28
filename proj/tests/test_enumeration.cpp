#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "locis/enumeration.hpp"
#include "locis/graph6.hpp"
#include "locis/iso.hpp"
#include "oracles.hpp"

using namespace locis;

TEST_CASE("connected class counts") {
    const long expect[8] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 7; ++n) CHECK(long(enumerate_connected(n).size()) == expect[n - 1]);
}

TEST_CASE("counts match the orbit-marking oracle") {
    for (int n = 1; n <= 6; ++n)
        CHECK(long(enumerate_connected(n).size()) == oracle::count_connected_classes(n));
}

TEST_CASE("optimized scan equals the reference") {
    for (int n = 1; n <= 6; ++n) {
        auto fast = enumerate_connected(n);
        auto ref = enumerate_connected_reference(n);
        REQUIRE(fast.size() == ref.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == ref[i]);
    }
}

TEST_CASE("output independent of thread count") {
    auto one = enumerate_connected(6, 1);
    auto four = enumerate_connected(6, 4);
    REQUIRE(one.size() == four.size());
    for (size_t i = 0; i < one.size(); ++i) CHECK(one[i] == four[i]);
}

TEST_CASE("every representative is connected, classes pairwise distinct") {
    for (int n = 4; n <= 6; ++n) {
        std::set<Certificate> seen;
        for (const Graph& g : enumerate_connected(n)) {
            CHECK(g.n() == n);
            CHECK(is_connected(g));
            CHECK(seen.insert(canonical_certificate(g)).second);
        }
    }
}

TEST_CASE("deterministic leading representatives") {
    auto c5 = enumerate_connected(5);
    CHECK(graph6_encode(c5[0]) == "Ds_");
    CHECK(graph6_encode(c5[1]) == "Dk_");
    CHECK(graph6_encode(c5[2]) == "D{_");
    int trees = 0;
    for (const Graph& g : c5)
        if (g.edge_count() == 4) ++trees;
    CHECK(trees == 3);  // unlabeled trees on 5 vertices
}

TEST_CASE("stream mirrors the vector") {
    GraphStream s(5);
    CHECK(s.order() == 5);
    auto all = enumerate_connected(5);
    for (const Graph& g : all) {
        auto got = s.next();
        REQUIRE(got.has_value());
        CHECK(*got == g);
    }
    CHECK_FALSE(s.next().has_value());
    CHECK_FALSE(s.next().has_value());
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(enumerate_connected(0), UnsupportedSize);
    CHECK_THROWS_AS(enumerate_connected(9), UnsupportedSize);
    CHECK_THROWS_AS(enumerate_connected_reference(9), UnsupportedSize);
}
