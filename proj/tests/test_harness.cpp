#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "locis/cycles.hpp"
#include "locis/enumeration.hpp"
#include "locis/families.hpp"
#include "locis/graph6.hpp"
#include "locis/harness.hpp"
#include "locis/local_props.hpp"

using namespace locis;

static std::set<std::string> skip_ids(const LemmaSuiteResult& r) {
    std::set<std::string> ids;
    for (auto& s : r.skips) ids.insert(s.lemma_id);
    return ids;
}

TEST_CASE("lemma suite on the smallest exception") {
    Graph s5 = singly_shuttered(5);
    Cycle c = Cycle::in(s5, std::vector<int>{0, 2, 1, 3});
    REQUIRE_FALSE(is_extendable(s5, c));
    auto res = lemma_suite(s5, c);
    CHECK(res.violations.empty());
    // max degree is 4, and the top-degree pair are true twins
    CHECK(skip_ids(res) == std::set<std::string>{"2.2.1", "2.2.2", "2.3"});
}

TEST_CASE("lemma suite on a discovered witness") {
    Graph s8 = singly_shuttered(8);
    auto rep = extendability_report(s8);
    REQUIRE(rep.witness.has_value());
    auto res = lemma_suite(s8, *rep.witness);
    CHECK(res.violations.empty());
}

TEST_CASE("lemma suite skips on a non locally isometric host") {
    // C_4 with a pendant: the square is non-extendable, neighborhoods of the
    // square vertices are disconnected
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    Cycle c = Cycle::in(g, std::vector<int>{0, 1, 2, 3});
    auto res = lemma_suite(g, c);
    CHECK(res.violations.empty());
    auto ids = skip_ids(res);
    CHECK(ids.count("2.2.1"));
    CHECK(ids.count("2.3"));
    CHECK(ids.count("2.4"));
    CHECK(ids.count("2.5"));
}

TEST_CASE("lemma suite preconditions") {
    Graph k4 = Graph::complete(4);
    Cycle tri = Cycle::in(k4, std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(lemma_suite(k4, tri), GraphError);  // extendable

    Graph c5 = Graph::cycle_graph(5);
    Cycle ham = Cycle::in(c5, std::vector<int>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(lemma_suite(c5, ham), GraphError);  // hamiltonian

    Graph s5 = singly_shuttered(5);
    Cycle foreign = Cycle::in(Graph::complete(5), std::vector<int>{2, 3, 4});
    CHECK_THROWS_AS(lemma_suite(s5, foreign), GraphError);  // not a cycle of the host
}

TEST_CASE("corrupted assertion is caught exactly once") {
    Graph s5 = singly_shuttered(5);
    Cycle c = Cycle::in(s5, std::vector<int>{0, 2, 1, 3});
    LemmaSuiteOptions opts;
    opts.corrupt_2_1_2 = true;
    auto res = lemma_suite(s5, c, opts);
    REQUIRE(res.violations.size() == 1);
    CHECK(res.violations[0].lemma_id == "2.1.2");
    CHECK(res.violations[0].graph6 == "D}o");
    CHECK_FALSE(res.violations[0].cycle.empty());
    CHECK_FALSE(res.violations[0].witness.empty());
    auto text = res.violations[0].to_string();
    CHECK(text.find("2.1.2") != std::string::npos);
}

TEST_CASE("degree-2 deletion check") {
    auto d10 = degree2_deletion_check(doubly_shuttered(10));
    CHECK_FALSE(d10.skipped);
    CHECK(d10.violations.empty());

    auto s6 = degree2_deletion_check(singly_shuttered(6));
    CHECK_FALSE(s6.skipped);
    CHECK(s6.violations.empty());

    CHECK(degree2_deletion_check(Graph::cycle_graph(6)).skipped);   // not locally isometric
    CHECK(degree2_deletion_check(Graph::complete(4)).skipped);      // no degree-2 vertex
    CHECK(degree2_deletion_check(singly_shuttered(17)).skipped);    // past the size budget
}

TEST_CASE("campaign fixtures at small orders") {
    auto d4 = run_campaign("delta4", 5, 7);
    CHECK(d4.scanned == 986);
    CHECK(d4.filtered == 7);
    CHECK(d4.conforming == 6);
    REQUIRE(d4.exceptions.size() == 1);
    CHECK(d4.exceptions[0].graph6 == "D}o");
    CHECK(d4.exceptions[0].cls.to_string() == "S_5");
    CHECK(d4.violations.empty());

    auto t31 = run_campaign("thm3_1", 6, 7);
    CHECK(t31.scanned == 965);
    CHECK(t31.filtered == 25);
    CHECK(t31.conforming == 22);
    REQUIRE(t31.exceptions.size() == 3);
    std::set<std::string> classes;
    for (auto& e : t31.exceptions) classes.insert(e.cls.to_string());
    CHECK(classes == std::set<std::string>{"D_6", "S_6", "S_7"});
    CHECK(t31.violations.empty());

    auto t41 = run_campaign("thm4_1", 7, 7);
    CHECK(t41.filtered == 26);
    REQUIRE(t41.exceptions.size() == 1);
    CHECK(t41.exceptions[0].cls.to_string() == "K_{2,4}+K_1");
    CHECK(t41.exceptions[0].order == 7);
    CHECK(t41.violations.empty());

    auto l43 = run_campaign("lem4_3", 7, 7);
    CHECK(l43.filtered == 60);
    CHECK(l43.conforming == 60);
    CHECK(l43.exceptions.empty());
    CHECK(l43.violations.empty());
}

TEST_CASE("campaign filter recount") {
    // independent recount of the thm3_1 hypothesis filter over n = 6..7
    long filtered = 0;
    for (int n = 6; n <= 7; ++n)
        for (const Graph& g : enumerate_connected(n))
            if (degree_profile(g).max_degree == 5 && is_locally_isometric(g)) ++filtered;
    auto rep = run_campaign("thm3_1", 6, 7);
    CHECK(rep.filtered == filtered);
    CHECK(rep.filtered == rep.conforming + long(rep.exceptions.size()) + long(rep.violations.size()));
}

TEST_CASE("campaign over a caller corpus") {
    std::vector<Graph> corpus{singly_shuttered(8), doubly_shuttered(8), highrise(8),
                              Graph::cycle_graph(8), Graph::complete(7)};
    auto rep = run_campaign("thm3_1", 6, 8, corpus);
    CHECK(rep.scanned == 5);
    CHECK(rep.filtered == 3);  // C_8 is not locally isometric, K_7 has max degree 6
    CHECK(rep.conforming == 1);
    REQUIRE(rep.exceptions.size() == 2);
    CHECK(rep.exceptions[0].cls.to_string() == "S_8");
    CHECK(rep.exceptions[1].cls.to_string() == "D_8");
    for (auto& e : rep.exceptions) {
        CHECK(e.order == 8);
        CHECK(graph6_decode(e.graph6).n() == 8);
        CHECK_FALSE(e.certificate_hex.empty());
    }
}

TEST_CASE("campaign determinism across thread counts") {
    auto one = run_campaign("thm3_1", 6, 7, 1);
    auto four = run_campaign("thm3_1", 6, 7, 4);
    one.elapsed_ms = four.elapsed_ms = 0;
    CHECK(one.to_json() == four.to_json());
    CHECK(one.summary() == four.summary());
}

TEST_CASE("campaign report document") {
    auto rep = run_campaign("delta4", 5, 6);
    auto doc = nlohmann::json::parse(rep.to_json());
    CHECK(doc["theorem"] == "delta4");
    CHECK(doc["range"][0] == 5);
    CHECK(doc["range"][1] == 6);
    CHECK(doc["scanned"].is_number());
    CHECK(doc["exceptions"].is_array());
    CHECK(doc["violations"].is_array());
    CHECK(doc.contains("exception_tally"));
    CHECK(rep.summary().find("delta4") != std::string::npos);
}

TEST_CASE("campaign guards") {
    CHECK_THROWS_AS(run_campaign("thm9_9", 5, 7), GraphError);
    CHECK_THROWS_AS(run_campaign("thm3_1", 6, 13), UnsupportedSize);
    CHECK_THROWS_AS(run_campaign("thm3_1", 6, 9), UnsupportedSize);  // built-in corpus tops out at 8
    std::vector<Graph> corpus{singly_shuttered(12)};
    CHECK(run_campaign("thm3_1", 6, 12, corpus).exceptions.size() == 1);
    CHECK_THROWS_AS(run_campaign("thm4_5", 6, 25, corpus), UnsupportedSize);
    auto wide = run_campaign("thm4_5", 6, 24, corpus);  // pancyclicity cap is higher
    CHECK(wide.scanned == 1);
}

TEST_CASE("theorem id list") {
    auto ids = theorem_ids();
    CHECK(ids.size() == 7);
    CHECK(std::count(ids.begin(), ids.end(), "thm3_1") == 1);
    CHECK(std::count(ids.begin(), ids.end(), "cor4_2") == 1);
}
