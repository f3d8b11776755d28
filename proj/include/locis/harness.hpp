#pragma once

#include <span>
#include <string>
#include <vector>

#include "locis/cycles.hpp"
#include "locis/families.hpp"
#include "locis/graph.hpp"

namespace locis {

struct LemmaViolation {
    std::string lemma_id;     // "2.1.1".."2.1.4", "2.2.1", "2.2.2", "2.3", "2.4", "2.5", "4.4"
    std::string graph6;       // host graph
    std::vector<int> cycle;   // witness cycle when the claim is about one, else empty
    std::vector<int> witness; // vertex binding the claim is about (graph ids)
    std::string expected;
    std::string observed;

    std::string to_string() const;
};

struct LemmaSkip {
    std::string lemma_id;
    std::string reason;
};

struct LemmaSuiteOptions {
    // Self-test hook: invert the expected non-adjacency of the shifted
    // cycle-neighbor claim, so a healthy graph/cycle pair must produce
    // exactly one violation.
    bool corrupt_2_1_2 = false;
};

struct LemmaSuiteResult {
    std::vector<LemmaViolation> violations;
    std::vector<LemmaSkip> skips;  // lemmas whose hypotheses G does not meet
};

// Asserts the non-extendable-cycle claims (2.1.x on any graph, 2.2.x when G
// is locally isometric with maximum degree 6) for every attachment binding
// on C, and the neighborhood claims (2.3, 2.4, 2.5) over all qualifying
// vertex bindings of G. Violations are deduplicated by claim, not by the
// binding that reached it. Throws GraphError unless C is a valid
// non-Hamiltonian non-extendable cycle of g.
LemmaSuiteResult lemma_suite(const Graph& g, const Cycle& c, const LemmaSuiteOptions& opts = {});

struct Degree2DeletionResult {
    bool skipped = false;
    std::string skip_reason;
    std::vector<LemmaViolation> violations;
};

// For every degree-2 vertex u of a locally isometric graph (n <= 16):
// deleting u keeps the graph locally isometric and lowers the circumference
// by at most one. Skipped (flagged, no violations) when the preconditions
// do not hold.
Degree2DeletionResult degree2_deletion_check(const Graph& g);

// Campaign ids: delta4, thm3_1, thm4_1, cor4_2, thm4_5, cor3_2, lem4_3.
std::vector<std::string> theorem_ids();

struct CampaignException {
    std::string graph6;
    std::string certificate_hex;
    int order = 0;
    ExceptionClass cls{ExceptionClass::NotExceptional, 0};
};

struct CampaignViolation {
    std::string graph6;
    std::string reason;
};

struct CampaignReport {
    std::string theorem;
    int min_order = 0;
    int max_order = 0;
    long scanned = 0;     // corpus graphs inside the order range
    long filtered = 0;    // of those, graphs meeting every hypothesis
    long conforming = 0;  // filtered graphs satisfying the primary conclusion
    std::vector<CampaignException> exceptions;  // fallback conclusion holds
    std::vector<CampaignViolation> violations;  // neither holds
    long elapsed_ms = 0;

    std::string to_json() const;  // stable machine-readable document
    std::string summary() const;  // one-line human summary
};

// Classifies every graph of the corpus that falls inside [min_order,
// max_order]. filtered == conforming + exceptions + violations. Reports are
// deterministic: corpus order is preserved and results are independent of
// the thread count. Orders above the isomorphism budget (12; 24 for the
// pancyclicity statements) are rejected.
CampaignReport run_campaign(const std::string& theorem_id, int min_order, int max_order,
                            std::span<const Graph> corpus, int threads = 1);

// Same, over the built-in connected-graph enumeration (max_order <= 8).
CampaignReport run_campaign(const std::string& theorem_id, int min_order, int max_order,
                            int threads = 1);

}  // namespace locis
