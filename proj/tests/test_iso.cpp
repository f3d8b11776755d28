#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "locis/enumeration.hpp"
#include "locis/families.hpp"
#include "locis/graph6.hpp"
#include "locis/iso.hpp"
#include "oracles.hpp"

using namespace locis;

TEST_CASE("certificate shape and relabeling invariance") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 300; ++rep) {
        Graph g = oracle::random_graph(rng, 3 + int(rng() % 7), 0.4);
        Certificate c = canonical_certificate(g);
        REQUIRE(!c.bytes.empty());
        CHECK(int(uint8_t(c.bytes[0])) == g.n());
        CHECK(canonical_certificate(oracle::permuted_copy(rng, g)) == c);
    }
}

TEST_CASE("distinguishes fixtures") {
    Graph k24p = join(Graph::empty_graph(1), Graph::complete_bipartite(2, 4));
    CHECK(canonical_certificate(k24p) != canonical_certificate(Graph::cycle_graph(7)));
    CHECK(are_isomorphic(strong_product(Graph::path(2), Graph::path(2)), Graph::complete(4)));
    CHECK_FALSE(are_isomorphic(singly_shuttered(8), doubly_shuttered(8)));
    CHECK(are_isomorphic(k24p, k24p));
}

TEST_CASE("dropping one shutter of D_10 gives S_9") {
    Graph d10 = doubly_shuttered(10);
    // shutters are the last two ids; remove the second one
    VertexSet keep = VertexSet::range(10);
    keep.remove(9);
    Graph rest = induced_subgraph(d10, keep).graph;
    CHECK(canonical_certificate(rest) == canonical_certificate(singly_shuttered(9)));
}

TEST_CASE("agreement with the all-permutation oracle on 1000 random pairs") {
    std::mt19937 rng(1009);
    int iso_seen = 0, non_seen = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        int n = 4 + int(rng() % 4);  // 4..7
        Graph a = oracle::random_graph(rng, n, 0.5);
        Graph b = (rng() & 1) ? oracle::permuted_copy(rng, a) : oracle::random_graph(rng, n, 0.5);
        bool truth = oracle::isomorphic_by_permutation(a, b);
        CHECK(are_isomorphic(a, b) == truth);
        CHECK((canonical_certificate(a) == canonical_certificate(b)) == truth);
        (truth ? iso_seen : non_seen)++;
    }
    // both outcomes must actually be exercised
    CHECK(iso_seen > 100);
    CHECK(non_seen > 100);
}

TEST_CASE("corpus certificates are pairwise distinct") {
    for (int n = 4; n <= 6; ++n) {
        std::set<Certificate> seen;
        for (const Graph& g : enumerate_connected(n)) CHECK(seen.insert(canonical_certificate(g)).second);
    }
}

TEST_CASE("canonical_key8 matches certificate equality classes") {
    std::mt19937 rng(77);
    auto key_of = [](const Graph& g) {
        uint8_t rows[8] = {};
        for (int v = 0; v < g.n(); ++v) rows[v] = uint8_t(g.row(v));
        return canonical_key8(g.n(), rows);
    };
    for (int rep = 0; rep < 200; ++rep) {
        Graph a = oracle::random_graph(rng, 7, 0.5);
        Graph b = (rng() & 1) ? oracle::permuted_copy(rng, a) : oracle::random_graph(rng, 7, 0.5);
        CHECK((key_of(a) == key_of(b)) == are_isomorphic(a, b));
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(canonical_certificate(Graph::cycle_graph(13)), UnsupportedSize);
}

TEST_CASE("hex form") {
    Certificate c = canonical_certificate(Graph::complete(3));
    CHECK(c.hex().size() == 2 * c.bytes.size());
    CHECK(c.hex().find_first_not_of("0123456789abcdef") == std::string::npos);
}
