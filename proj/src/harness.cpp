#include "locis/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "locis/enumeration.hpp"
#include "locis/graph6.hpp"
#include "locis/iso.hpp"
#include "locis/local_props.hpp"

namespace locis {

namespace {

std::string join_ints(std::span<const int> v) {
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

// Collects violations, one per distinct claim: a claim reached through two
// bindings (e.g. both traversal directions of the cycle) is reported once.
struct Collector {
    std::string g6;
    std::vector<int> cycle;
    std::vector<LemmaViolation> out;
    std::set<std::string> seen;

    Collector(std::string g, std::vector<int> c) : g6(std::move(g)), cycle(std::move(c)) {}

    void add(const std::string& id, std::vector<int> witness, const std::string& expected,
             const std::string& observed, bool on_cycle = true) {
        std::vector<int> key = witness;
        std::sort(key.begin(), key.end());
        std::string k = id + '|' + join_ints(key) + '|' + expected;
        if (!seen.insert(k).second) return;
        out.push_back({id, g6, on_cycle ? cycle : std::vector<int>{}, std::move(witness),
                       expected, observed});
    }
};

// Claims about a single non-extendable cycle: no two attachment vertices
// with a common off-cycle neighbour are consecutive, their shifted
// neighbours are non-adjacent, and the two chord-related claims.
void check_nonextendable_cycle_claims(const Graph& g, const Cycle& c, bool corrupt_2_1_2,
                                      Collector& col) {
    int t = c.length();
    uint64_t on = c.vertex_set().bits;
    // attachment positions and their off-cycle neighbour masks
    std::vector<uint64_t> off(t);
    for (int i = 0; i < t; i++) off[i] = g.row(c.at(i)) & ~on;

    for (int i = 0; i < t; i++) {
        if (!off[i]) continue;
        for (int j = 0; j < t; j++) {
            if (j == i) continue;
            uint64_t common = off[i] & off[j];
            if (!common) continue;
            int vi = c.at(i), vj = c.at(j);
            for (uint64_t m = common; m; m &= m - 1) {
                int x = std::countr_zero(m);
                if (j == (i + 1) % t || j == (i + t - 1) % t)
                    col.add("2.1.1", {vi, vj, x},
                            "attachment vertices sharing an off-cycle neighbour are not "
                            "consecutive on the cycle",
                            "positions " + std::to_string(i) + " and " + std::to_string(j) +
                                " are consecutive (common neighbour " + std::to_string(x) + ")");

                int a1 = c.at(i + 1), b1 = c.at(j + 1);
                int a2 = c.at(i - 1), b2 = c.at(j - 1);
                for (auto [a, b] : {std::pair{a1, b1}, std::pair{a2, b2}}) {
                    bool adj = g.adjacent(a, b);
                    if (!corrupt_2_1_2 ? adj : !adj)
                        col.add("2.1.2", {a, b, x},
                                corrupt_2_1_2
                                    ? "successors of the attachment pair are adjacent "
                                      "(deliberately inverted self-test expectation)"
                                    : "equally shifted neighbours of the attachment pair are "
                                      "non-adjacent",
                                std::to_string(a) + (adj ? " ~ " : " !~ ") + std::to_string(b));
                }

                if (g.adjacent(c.at(i - 1), c.at(i + 1)))
                    for (int bq : {c.at(j - 1), c.at(j + 1)}) {
                        if (!g.adjacent(bq, vi)) continue;
                        col.add("2.1.3", {bq, vi, x},
                                "with the chord around position i, neighbours of the second "
                                "attachment avoid the first",
                                std::to_string(bq) + " ~ " + std::to_string(vi));
                    }

                if (j == (i + 2) % t) {
                    // consecutive pairs on the path v_{i+2} .. v_i, skipping v_{i+1}
                    int mid = c.at(i + 1);
                    for (int s = 2; s <= t - 1; s++) {
                        int pk = c.at(i + s), pk1 = c.at(i + s + 1);
                        if (g.adjacent(mid, pk) && g.adjacent(mid, pk1))
                            col.add("2.1.4", {mid, pk, pk1},
                                    "the vertex between attachments two apart has no two "
                                    "consecutive neighbours on the long arc",
                                    std::to_string(mid) + " ~ {" + std::to_string(pk) + "," +
                                        std::to_string(pk1) + "}");
                    }
                }
            }
        }
    }
}

// Claims about a degree-6 cycle vertex with exactly one off-cycle
// neighbour, in a locally isometric host of maximum degree 6: a chord
// triple {x, v_1, v_{t-1}}-dominating endpoint pins its position (first
// item) or forces a true twin of degree 6 (second item).
void check_degree6_chord_claims(const Graph& g, const Cycle& c, Collector& col) {
    int t = c.length();
    uint64_t on = c.vertex_set().bits;
    for (int p = 0; p < t; p++) {
        int v0 = c.at(p);
        if (g.degree(v0) != 6) continue;
        uint64_t off = g.row(v0) & ~on;
        if (std::popcount(off) != 1) continue;
        int x = std::countr_zero(off);
        for (int dir : {1, -1}) {
            // relative positions of the three chords, 1 < i < j < k < t-1
            std::vector<int> chords;
            for (int s = 2; s <= t - 2; s++)
                if (g.adjacent(v0, c.at(p + dir * s))) chords.push_back(s);
            if (chords.size() != 3) continue;  // neighbours not all on the cycle as required
            int j = chords[1], k = chords[2];
            int v1 = c.at(p + dir), vl = c.at(p - dir);  // v_1 and v_{t-1}

            auto dominates = [&](int u) {
                return g.adjacent(u, x) && g.adjacent(u, v1) && g.adjacent(u, vl);
            };
            // the low-side mirror of the first claim comes out of dir == -1
            int vjv = c.at(p + dir * j), vk = c.at(p + dir * k);
            if (dominates(vk) && k != t - 2)
                col.add("2.2.1", {v0, vk, x},
                        "an outer chord endpoint adjacent to {x, v_1, v_{t-1}} sits next to "
                        "its end of the cycle",
                        "chord position " + std::to_string(k) + " with t = " + std::to_string(t));
            if (dominates(vjv) && !(are_true_twins(g, v0, vjv) && g.degree(vjv) == 6))
                col.add("2.2.2", {v0, vjv, x},
                        "the middle chord endpoint adjacent to {x, v_1, v_{t-1}} is a true "
                        "twin of degree 6",
                        "vertices " + std::to_string(v0) + " and " + std::to_string(vjv) +
                            " are not true twins of degree 6");
        }
    }
}

// Neighborhood claims that need no cycle. 2.3: in a twin-free-at-maximum
// graph, each neighbour of a maximum-degree vertex has two neighbours
// inside that neighborhood. 2.4: a neighbour adjacent to at most one other
// forces a universal vertex (a true twin at maximum degree). 2.5: a vertex
// adjacent to all of S and to nothing else around S has N(w) = S exactly.
void check_neighborhood_claims(const Graph& g, bool run_2_3, bool run_2_5, Collector& col) {
    int n = g.n();
    int maxdeg = 0;
    for (int v = 0; v < n; v++) maxdeg = std::max(maxdeg, g.degree(v));

    for (int v = 0; v < n; v++) {
        uint64_t nv = g.row(v);
        int k = std::popcount(nv);
        for (uint64_t m = nv; m; m &= m - 1) {
            int x = std::countr_zero(m);
            int inside = std::popcount(g.row(x) & nv);
            if (run_2_3 && k == maxdeg && inside < 2)
                col.add("2.3", {v, x},
                        "every neighbour of a maximum-degree vertex has two neighbours "
                        "inside the neighborhood",
                        std::to_string(inside) + " inside N(" + std::to_string(v) + ")",
                        false);
            if (k >= 2 && inside <= 1) {
                // x misses k-2 vertices of N(v): a universal vertex must exist
                std::vector<int> universals;
                for (uint64_t mu = nv; mu; mu &= mu - 1) {
                    int y = std::countr_zero(mu);
                    if ((g.row(y) & nv) == (nv & ~(uint64_t(1) << y))) universals.push_back(y);
                }
                if (universals.empty())
                    col.add("2.4", {v, x}, "a universal vertex exists in the neighborhood",
                            "no universal vertex in N(" + std::to_string(v) + ")", false);
                else if (k == maxdeg &&
                         std::none_of(universals.begin(), universals.end(),
                                      [&](int y) { return are_true_twins(g, y, v); }))
                    col.add("2.4", {v, x},
                            "at maximum degree the universal neighbour is a true twin",
                            "no universal vertex of N(" + std::to_string(v) +
                                ") is a true twin of it",
                            false);
            }
        }
    }

    if (!run_2_5) return;
    for (int w = 0; w < n; w++) {
        uint64_t nw = g.row(w);
        if (!nw) continue;
        for (uint64_t s = nw; s; s = (s - 1) & nw) {
            uint64_t ns = 0;
            for (uint64_t m = s; m; m &= m - 1) ns |= g.row(std::countr_zero(m));
            uint64_t fringe = ns & ~s & ~(uint64_t(1) << w);
            if (nw & fringe) continue;  // hypothesis fails: w sees past S
            if (nw != s) {
                std::vector<int> witness{w};
                for (uint64_t m = s; m; m &= m - 1) witness.push_back(std::countr_zero(m));
                col.add("2.5", witness,
                        "a vertex adjacent to all of S and to nothing else near S has "
                        "neighborhood exactly S",
                        "N(" + std::to_string(w) + ") contains vertices outside S", false);
            }
        }
    }
}

}  // namespace

std::string LemmaViolation::to_string() const {
    std::string s = "lemma " + lemma_id + " on " + graph6;
    if (!cycle.empty()) s += " cycle [" + join_ints(cycle) + "]";
    s += " witness [" + join_ints(witness) + "]: expected " + expected + "; observed " + observed;
    return s;
}

LemmaSuiteResult lemma_suite(const Graph& g, const Cycle& c, const LemmaSuiteOptions& opts) {
    if (!c.is_valid_in(g)) throw GraphError("lemma suite: cycle is not a cycle of the graph");
    if (c.length() == g.n())
        throw GraphError("lemma suite: cycle is Hamiltonian, need a non-extendable cycle");
    if (is_extendable(g, c)) throw GraphError("lemma suite: cycle is extendable");

    LemmaSuiteResult res;
    Collector col{graph6_encode(g), c.verts()};

    check_nonextendable_cycle_claims(g, c, opts.corrupt_2_1_2, col);

    bool iso = is_locally_isometric(g);
    int maxdeg = degree_profile(g).max_degree;
    if (iso && maxdeg == 6) {
        check_degree6_chord_claims(g, c, col);
    } else {
        std::string why = iso ? "maximum degree is " + std::to_string(maxdeg) + ", not 6"
                              : "graph is not locally isometric";
        res.skips.push_back({"2.2.1", why});
        res.skips.push_back({"2.2.2", why});
    }

    if (iso) {
        bool twin_free_at_max = true;
        for (const TwinPair& tp : twin_pairs(g))
            if (tp.true_twin && g.degree(tp.u) == maxdeg) twin_free_at_max = false;
        if (g.n() < 3) {
            res.skips.push_back({"2.3", "order below 3"});
        } else if (!twin_free_at_max) {
            res.skips.push_back({"2.3", "graph has true twins of maximum degree"});
        }
        bool small_degrees = maxdeg <= 16;
        if (!small_degrees)
            res.skips.push_back({"2.5", "maximum degree above the subset sweep budget (16)"});
        check_neighborhood_claims(g, g.n() >= 3 && twin_free_at_max, small_degrees, col);
    } else {
        for (const char* id : {"2.3", "2.4", "2.5"})
            res.skips.push_back({id, "graph is not locally isometric"});
    }

    res.violations = std::move(col.out);
    return res;
}

Degree2DeletionResult degree2_deletion_check(const Graph& g) {
    Degree2DeletionResult res;
    if (g.n() > 16) {
        res.skipped = true;
        res.skip_reason = "order above the circumference budget (n <= 16)";
        return res;
    }
    if (!is_locally_isometric(g)) {
        res.skipped = true;
        res.skip_reason = "graph is not locally isometric";
        return res;
    }
    DegreeProfile dp = degree_profile(g);
    if (dp.degree2_vertices.empty()) {
        res.skipped = true;
        res.skip_reason = "no degree-2 vertex";
        return res;
    }

    // a degree-2 vertex of a locally isometric graph lies on a triangle,
    // so the circumference below is always defined
    int c_full = *cycle_spectrum(g).circumference;
    std::string g6 = graph6_encode(g);
    for (int u : dp.degree2_vertices) {
        VertexSet keep = VertexSet::range(g.n());
        keep.remove(u);
        Graph h = induced_subgraph(g, keep).graph;
        if (!is_locally_isometric(h)) {
            res.violations.push_back({"4.4", g6, {}, {u},
                                      "deleting a degree-2 vertex keeps the graph locally "
                                      "isometric",
                                      "removing " + std::to_string(u) + " breaks local isometry"});
            continue;
        }
        auto c_less = cycle_spectrum(h).circumference;
        if (!c_less) continue;  // deletion left an acyclic remainder (triangle host)
        if (c_full > *c_less + 1)
            res.violations.push_back(
                {"4.4", g6, {}, {u},
                 "circumference drops by at most one when a degree-2 vertex goes",
                 "c(G) = " + std::to_string(c_full) + ", c(G-u) = " + std::to_string(*c_less)});
    }
    return res;
}

namespace {

enum class Verdict { filtered_out, conforming, exception, violation };

struct Outcome {
    Verdict verdict;
    ExceptionClass cls;
    std::string reason;

    Outcome(Verdict v = Verdict::filtered_out, ExceptionClass c = {ExceptionClass::NotExceptional, 0},
            std::string r = "")
        : verdict(v), cls(c), reason(std::move(r)) {}
};

// Hypothesis gates run cheapest first: degree bounds, connectivity, local
// isometry, twins; only survivors pay for extendability or the spectrum.
Outcome classify(const std::string& id, const Graph& g) {
    DegreeProfile dp = degree_profile(g);
    int n = g.n(), D = dp.max_degree;

    if (id == "delta4") {
        if (D > 4) return {};
    } else if (id == "thm3_1") {
        if (D != 5 || n < 6) return {};
    } else if (id == "thm4_1") {
        if (D != 6) return {};
    } else if (id == "cor4_2") {
        if (D != 6 || n < 8) return {};
    } else if (id == "thm4_5") {
        if (D > 6 || n < D + 1) return {};
    } else if (id == "cor3_2") {
        if (D > 5 || n <= D) return {};
    } else if (id == "lem4_3") {
        if (n != 7 || D != 6) return {};
    }

    if (!is_connected(g) || !is_locally_isometric(g)) return {};
    if (id == "thm4_1")
        for (const TwinPair& tp : twin_pairs(g))
            if (tp.true_twin && g.degree(tp.u) == 6) return {};

    if (id == "thm4_5" || id == "cor3_2" || id == "lem4_3") {
        if (cycle_spectrum(g).weakly_pancyclic) return {Verdict::conforming};
        return {Verdict::violation, {}, "not weakly pancyclic"};
    }

    if (extendability_report(g).fully_cycle_extendable) return {Verdict::conforming};

    if (id == "delta4") {
        if (n == 5) {
            ExceptionClass cls = recognize_exception(g);
            if (cls.tag == ExceptionClass::SinglyShuttered) return {Verdict::exception, cls};
        }
        return {Verdict::violation, {}, "not fully cycle extendable and not the join of an "
                                        "edge with three isolated vertices"};
    }
    if (id == "thm3_1") {
        ExceptionClass cls = recognize_exception(g);
        if (cls.tag == ExceptionClass::SinglyShuttered || cls.tag == ExceptionClass::DoublyShuttered)
            return {Verdict::exception, cls};
        return {Verdict::violation, {},
                "not fully cycle extendable and not a shuttered highrise"};
    }
    if (id == "thm4_1") {
        ExceptionClass cls = recognize_exception(g);
        if (cls.tag == ExceptionClass::K24PlusK1) return {Verdict::exception, cls};
        return {Verdict::violation, {},
                "not fully cycle extendable and not the complete bipartite exception"};
    }
    // cor4_2: any graph escaping full cycle extendability must keep a
    // degree-2 vertex
    if (!dp.degree2_vertices.empty()) return {Verdict::exception, recognize_exception(g)};
    return {Verdict::violation, {}, "not fully cycle extendable and no degree-2 vertex"};
}

}  // namespace

std::vector<std::string> theorem_ids() {
    return {"delta4", "thm3_1", "thm4_1", "cor4_2", "thm4_5", "cor3_2", "lem4_3"};
}

CampaignReport run_campaign(const std::string& theorem_id, int min_order, int max_order,
                            std::span<const Graph> corpus, int threads) {
    auto ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), theorem_id) == ids.end())
        throw GraphError("unknown theorem id: " + theorem_id);
    bool needs_iso_match =
        theorem_id != "thm4_5" && theorem_id != "cor3_2" && theorem_id != "lem4_3";
    int cap = needs_iso_match ? 12 : 24;
    if (max_order > cap)
        throw UnsupportedSize("campaign " + theorem_id + " supports max order " +
                              std::to_string(cap));

    auto t0 = std::chrono::steady_clock::now();
    CampaignReport rep;
    rep.theorem = theorem_id;
    rep.min_order = min_order;
    rep.max_order = max_order;

    std::vector<const Graph*> picked;
    for (const Graph& g : corpus)
        if (g.n() >= min_order && g.n() <= max_order) picked.push_back(&g);
    rep.scanned = long(picked.size());

    std::vector<Outcome> out(picked.size());
#ifdef _OPENMP
#pragma omp parallel for num_threads(std::max(threads, 1)) schedule(dynamic, 16)
#endif
    for (size_t i = 0; i < picked.size(); i++) out[i] = classify(theorem_id, *picked[i]);

    for (size_t i = 0; i < picked.size(); i++) {
        const Graph& g = *picked[i];
        switch (out[i].verdict) {
            case Verdict::filtered_out:
                break;
            case Verdict::conforming:
                rep.filtered++;
                rep.conforming++;
                break;
            case Verdict::exception:
                rep.filtered++;
                rep.exceptions.push_back({graph6_encode(g), canonical_certificate(g).hex(),
                                          g.n(), out[i].cls});
                break;
            case Verdict::violation:
                rep.filtered++;
                rep.violations.push_back({graph6_encode(g), out[i].reason});
                break;
        }
    }

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

CampaignReport run_campaign(const std::string& theorem_id, int min_order, int max_order,
                            int threads) {
    if (max_order > 8)
        throw UnsupportedSize("built-in corpus covers orders up to 8");
    if (min_order < 1) min_order = 1;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> corpus;
    for (int n = min_order; n <= max_order; n++) {
        std::vector<Graph> level = enumerate_connected(n, threads);
        corpus.insert(corpus.end(), level.begin(), level.end());
    }
    CampaignReport rep = run_campaign(theorem_id, min_order, max_order, corpus, threads);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::string CampaignReport::to_json() const {
    nlohmann::json j;
    j["theorem"] = theorem;
    j["range"] = {min_order, max_order};
    j["scanned"] = scanned;
    j["filtered"] = filtered;
    j["conforming"] = conforming;
    j["exceptions"] = nlohmann::json::array();
    std::map<std::string, int> tally;
    for (const CampaignException& e : exceptions) {
        j["exceptions"].push_back({{"graph6", e.graph6},
                                   {"certificate", e.certificate_hex},
                                   {"order", e.order},
                                   {"class", e.cls.to_string()}});
        tally[e.cls.to_string()]++;
    }
    j["exception_tally"] = tally;
    j["violations"] = nlohmann::json::array();
    for (const CampaignViolation& v : violations)
        j["violations"].push_back({{"graph6", v.graph6}, {"reason", v.reason}});
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

std::string CampaignReport::summary() const {
    std::ostringstream os;
    os << theorem << " over n=" << min_order << ".." << max_order << ": scanned " << scanned
       << ", " << filtered << " met the hypotheses, " << conforming << " conforming, "
       << exceptions.size() << " exceptions";
    if (!exceptions.empty()) {
        std::map<std::string, int> tally;
        for (const CampaignException& e : exceptions) tally[e.cls.to_string()]++;
        os << " (";
        bool first = true;
        for (auto& [name, cnt] : tally) {
            if (!first) os << ", ";
            first = false;
            os << name;
            if (cnt > 1) os << " x" << cnt;
        }
        os << ")";
    }
    os << ", " << violations.size() << " violations, " << elapsed_ms << " ms";
    return os.str();
}

}  // namespace locis
