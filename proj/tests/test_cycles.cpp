#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "locis/cycles.hpp"
#include "locis/enumeration.hpp"
#include "locis/families.hpp"
#include "oracles.hpp"

using namespace locis;

TEST_CASE("cycle canonical form and validation") {
    Graph c5 = Graph::cycle_graph(5);
    Cycle a = Cycle::in(c5, std::vector<int>{2, 3, 4, 0, 1});
    CHECK(a.verts() == std::vector<int>{0, 1, 2, 3, 4});
    Cycle b = Cycle::in(c5, std::vector<int>{1, 0, 4, 3, 2});
    CHECK(a == b);
    CHECK(a.at(-1) == 4);
    CHECK(a.at(7) == 2);
    CHECK(a.vertex_set() == VertexSet::range(5));
    CHECK(a.is_valid_in(c5));
    CHECK_FALSE(a.is_valid_in(Graph::path(5)));

    CHECK_THROWS_AS(Cycle::in(c5, std::vector<int>{0, 1}), GraphError);
    CHECK_THROWS_AS(Cycle::in(c5, std::vector<int>{0, 1, 1}), GraphError);
    CHECK_THROWS_AS(Cycle::in(c5, std::vector<int>{0, 1, 3}), GraphError);
    CHECK_THROWS_AS(Cycle::in(c5, std::vector<int>{0, 1, 9}), GraphError);
}

TEST_CASE("hamiltonian search") {
    auto hc = hamiltonian_cycle(Graph::cycle_graph(5));
    REQUIRE(hc);
    CHECK(hc->verts() == std::vector<int>{0, 1, 2, 3, 4});

    CHECK(hamiltonian_cycle(Graph::complete(6)));
    CHECK_FALSE(hamiltonian_cycle(join(Graph::empty_graph(1), Graph::complete_bipartite(2, 4))));
    CHECK_FALSE(hamiltonian_cycle(named(NamedGraph::petersen)));
    CHECK_FALSE(hamiltonian_cycle(Graph::path(4)));
    CHECK(hamiltonian_cycle(named(NamedGraph::heawood)));

    CHECK(has_hamiltonian_path(Graph::path(4)));
    CHECK(has_hamiltonian_path(named(NamedGraph::petersen)));
    CHECK_FALSE(has_hamiltonian_path(Graph::complete_bipartite(1, 3)));
}

TEST_CASE("hamiltonian with required edges") {
    Graph k4 = Graph::complete(4);
    std::vector<std::pair<int, int>> req{{0, 1}, {2, 3}};
    auto hc = hamiltonian_cycle_required(k4, req);
    REQUIRE(hc);
    auto on_cycle = [&](int u, int v) {
        for (int i = 0; i < hc->length(); ++i)
            if ((hc->at(i) == u && hc->at(i + 1) == v) || (hc->at(i) == v && hc->at(i + 1) == u))
                return true;
        return false;
    };
    CHECK(on_cycle(0, 1));
    CHECK(on_cycle(2, 3));

    // forcing all three edges at one vertex is impossible
    Graph k5 = Graph::complete(5);
    std::vector<std::pair<int, int>> bad{{0, 1}, {0, 2}, {0, 3}};
    CHECK_FALSE(hamiltonian_cycle_required(k5, bad));
    std::vector<std::pair<int, int>> notedge{{0, 3}};
    CHECK_THROWS_AS(hamiltonian_cycle_required(Graph::cycle_graph(6), notedge), GraphError);
}

TEST_CASE("for_each_cycle visits every cycle once") {
    int count = 0;
    for_each_cycle(Graph::cycle_graph(5), [&](const Cycle&) {
        ++count;
        return true;
    });
    CHECK(count == 1);

    std::vector<Cycle> seen;
    for_each_cycle(Graph::complete(4), [&](const Cycle& c) {
        seen.push_back(c);
        return true;
    });
    CHECK(seen.size() == 7);  // 4 triangles + 3 quadrilaterals
    for (size_t i = 0; i < seen.size(); ++i)
        for (size_t j = i + 1; j < seen.size(); ++j) CHECK_FALSE(seen[i] == seen[j]);

    count = 0;
    for_each_cycle(Graph::complete(4), [&](const Cycle&) { return ++count < 3; });
    CHECK(count == 3);  // early stop honored
}

TEST_CASE("spectrum fixtures") {
    auto k4 = cycle_spectrum(Graph::complete(4));
    CHECK(k4.girth == 3);
    CHECK(k4.circumference == 4);
    CHECK(k4.achieved_lengths == std::vector<int>{3, 4});
    CHECK(k4.pancyclic);
    CHECK(k4.hamiltonian);

    auto k24p = cycle_spectrum(join(Graph::empty_graph(1), Graph::complete_bipartite(2, 4)));
    CHECK(k24p.girth == 3);
    CHECK(k24p.circumference == 6);
    CHECK(k24p.achieved_lengths == std::vector<int>{3, 4, 5, 6});
    CHECK(k24p.weakly_pancyclic);
    CHECK_FALSE(k24p.pancyclic);
    CHECK_FALSE(k24p.hamiltonian);

    auto pet = cycle_spectrum(named(NamedGraph::petersen));
    CHECK(pet.girth == 5);
    CHECK(pet.circumference == 9);
    CHECK(pet.achieved_lengths == std::vector<int>{5, 6, 8, 9});
    CHECK_FALSE(pet.weakly_pancyclic);  // no 7-cycle

    auto tree = cycle_spectrum(Graph::path(5));
    CHECK_FALSE(tree.girth.has_value());
    CHECK_FALSE(tree.circumference.has_value());
    CHECK(tree.achieved_lengths.empty());
    CHECK(tree.weakly_pancyclic);  // vacuous
    CHECK_FALSE(tree.pancyclic);

    auto c5 = cycle_spectrum(Graph::cycle_graph(5));
    CHECK(c5.girth == 5);
    CHECK(c5.weakly_pancyclic);
    CHECK_FALSE(c5.pancyclic);
    CHECK(c5.hamiltonian);
}

TEST_CASE("spectrum agrees with the subset oracle") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            auto got = cycle_spectrum(g);
            auto want = oracle::spectrum_by_subsets(g);
            CHECK(got.girth == want.girth);
            CHECK(got.circumference == want.circumference);
            CHECK(got.achieved_lengths == want.lengths);
            bool wp = true;
            if (want.girth)
                for (int L = *want.girth; L <= *want.circumference; ++L)
                    if (!std::count(want.lengths.begin(), want.lengths.end(), L)) wp = false;
            CHECK(got.weakly_pancyclic == wp);
            CHECK(got.hamiltonian == (want.circumference == g.n()));
        }
    // spot sample at n = 7
    auto corpus7 = enumerate_connected(7);
    for (size_t i = 0; i < corpus7.size(); i += 37) {
        auto got = cycle_spectrum(corpus7[i]);
        auto want = oracle::spectrum_by_subsets(corpus7[i]);
        CHECK(got.achieved_lengths == want.lengths);
    }
}

TEST_CASE("extendability fixtures") {
    Graph k4 = Graph::complete(4);
    CHECK(is_extendable(k4, Cycle::in(k4, std::vector<int>{0, 1, 2})));

    Graph s5 = join(Graph::complete(2), Graph::empty_graph(3));
    Cycle c = Cycle::in(s5, std::vector<int>{0, 2, 1, 3});
    CHECK_FALSE(is_extendable(s5, c));

    Graph k24p = join(Graph::empty_graph(1), Graph::complete_bipartite(2, 4));
    // apex 0, 2-side {1,2}, 4-side {3..6}
    CHECK(is_extendable(k24p, Cycle::in(k24p, std::vector<int>{0, 1, 3, 2})));

    Cycle ham = Cycle::in(k4, std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(is_extendable(k4, ham), GraphError);
    Cycle foreign = Cycle::in(Graph::complete(5), std::vector<int>{2, 3, 4});
    CHECK_FALSE(foreign.is_valid_in(s5));
    CHECK_THROWS_AS(is_extendable(s5, foreign), GraphError);
}

TEST_CASE("extendability reports") {
    auto h7 = extendability_report(highrise(7));
    CHECK(h7.fully_cycle_extendable);
    CHECK_FALSE(h7.witness.has_value());

    auto s8 = extendability_report(singly_shuttered(8));
    CHECK_FALSE(s8.cycle_extendable);
    CHECK_FALSE(s8.fully_cycle_extendable);
    REQUIRE(s8.witness.has_value());
    Graph g = singly_shuttered(8);
    CHECK(s8.witness->is_valid_in(g));
    CHECK_FALSE(is_extendable(g, *s8.witness));

    auto p4 = extendability_report(Graph::path(4));
    CHECK(p4.acyclic);
    CHECK(p4.cycle_extendable);  // vacuous
    CHECK_FALSE(p4.every_vertex_on_triangle);
    CHECK_FALSE(p4.fully_cycle_extendable);

    auto k4 = extendability_report(Graph::complete(4));
    CHECK(k4.fully_cycle_extendable);
}

TEST_CASE("hamiltonian iff circumference equals order") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            auto sp = cycle_spectrum(g);
            CHECK(sp.hamiltonian == (sp.circumference && *sp.circumference == n));
            CHECK(sp.hamiltonian == hamiltonian_cycle(g).has_value());
        }
}

TEST_CASE("fully cycle extendable implies hamiltonian implies weakly pancyclic with girth 3") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            auto rep = extendability_report(g);
            if (!rep.fully_cycle_extendable || rep.acyclic) continue;
            auto sp = cycle_spectrum(g);
            CHECK(sp.hamiltonian);
            CHECK(sp.weakly_pancyclic);
            CHECK(sp.girth == 3);
        }
}

TEST_CASE("isolated vertex never repairs cycle extendability") {
    // it can break it (a hamiltonian cycle stops being hamiltonian and the
    // new vertex is unreachable), but never the other way around
    for (const Graph& g : enumerate_connected(5)) {
        Graph padded = Graph::from_edges(6, g.edges());
        auto a = extendability_report(g);
        auto b = extendability_report(padded);
        if (!a.cycle_extendable) CHECK_FALSE(b.cycle_extendable);
        CHECK_FALSE(b.every_vertex_on_triangle);
        CHECK_FALSE(b.fully_cycle_extendable);
    }
}
