// Command-line surface over the library: graph6 in, graph6/JSON-lines out.
// Exit codes: 0 clean, 1 violations found, 2 usage, 3 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "locis/cycles.hpp"
#include "locis/enumeration.hpp"
#include "locis/families.hpp"
#include "locis/graph.hpp"
#include "locis/graph6.hpp"
#include "locis/harness.hpp"
#include "locis/iso.hpp"
#include "locis/local_props.hpp"
#include "locis/reduction.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using nlohmann::json;
using namespace locis;

namespace {

int default_threads() {
    if (const char* env = std::getenv("LOCIS_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<Graph> read_graphs(const std::string& path) {
    if (path == "-") return graph6_read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw GraphError("cannot open input file: " + path);
    return graph6_read_stream(f);
}

struct Out {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Out(const std::string& path) {
        if (path == "-") return;
        file.open(path);
        if (!file) throw GraphError("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

json opt_to_json(const std::optional<int>& v) {
    return v ? json(*v) : json(nullptr);
}

int cmd_check(const std::string& input, const std::string& output) {
    Out out(output);
    for (const Graph& g : read_graphs(input)) {
        LocalProfile lp = local_profile(g);
        DegreeProfile dp = degree_profile(g);
        json j;
        j["graph6"] = graph6_encode(g);
        j["n"] = g.n();
        j["edges"] = g.edge_count();
        j["min_degree"] = dp.min_degree;
        j["max_degree"] = dp.max_degree;
        j["degrees"] = dp.sorted_degrees;
        j["degree2_vertices"] = dp.degree2_vertices;
        json diam = json::array();
        for (const auto& d : lp.neighborhood_diameter) diam.push_back(opt_to_json(d));
        j["neighborhood_diameters"] = diam;
        j["min_k"] = opt_to_json(lp.min_k);
        j["locally_connected"] = lp.locally_connected;
        j["locally_isometric"] = lp.locally_isometric;
        j["locally_traceable"] = lp.locally_traceable;
        j["locally_hamiltonian"] = lp.locally_hamiltonian;
        out.stream() << j.dump() << "\n";
    }
    return 0;
}

int cmd_spectrum(const std::string& input, const std::string& output) {
    Out out(output);
    for (const Graph& g : read_graphs(input)) {
        CycleSpectrum sp = cycle_spectrum(g);
        json j;
        j["graph6"] = graph6_encode(g);
        j["girth"] = opt_to_json(sp.girth);
        j["circumference"] = opt_to_json(sp.circumference);
        j["achieved_lengths"] = sp.achieved_lengths;
        j["weakly_pancyclic"] = sp.weakly_pancyclic;
        j["pancyclic"] = sp.pancyclic;
        j["hamiltonian"] = sp.hamiltonian;
        out.stream() << j.dump() << "\n";
    }
    return 0;
}

int cmd_extend(const std::string& input, const std::string& output) {
    Out out(output);
    for (const Graph& g : read_graphs(input)) {
        ExtendabilityReport er = extendability_report(g);
        json j;
        j["graph6"] = graph6_encode(g);
        j["cycle_extendable"] = er.cycle_extendable;
        j["every_vertex_on_triangle"] = er.every_vertex_on_triangle;
        j["fully_cycle_extendable"] = er.fully_cycle_extendable;
        j["acyclic"] = er.acyclic;
        j["witness"] = er.witness ? json(er.witness->verts()) : json(nullptr);
        out.stream() << j.dump() << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& input, const std::string& output) {
    Out out(output);
    for (const Graph& g : read_graphs(input)) {
        ExceptionClass cls = recognize_exception(g);
        json j;
        j["graph6"] = graph6_encode(g);
        j["class"] = cls.to_string();
        j["order"] = g.n();
        out.stream() << j.dump() << "\n";
    }
    return 0;
}

int cmd_generate(const std::string& family, const std::string& name, int order, int r,
                 int max_degree, bool list, const std::string& output) {
    Out out(output);
    if (list) {
        for (const std::string& s : named_graph_names()) out.stream() << s << "\n";
        return 0;
    }
    if (name.empty() && family.empty()) {
        std::cerr << "generate needs --family, --name or --list\n";
        return 2;
    }
    Graph g;
    if (!name.empty()) {
        auto which = named_by_string(name);
        if (!which) throw GraphError("unknown named graph: " + name);
        g = named(*which);
    } else if (family == "highrise") {
        g = highrise(order);
    } else if (family == "singly_shuttered") {
        g = singly_shuttered(order);
    } else if (family == "doubly_shuttered") {
        g = doubly_shuttered(order);
    } else if (family == "shuttered") {
        g = shuttered_highrise({order, r, max_degree});
    } else {
        throw GraphError("unknown family: " + family);
    }
    out.stream() << graph6_encode(g) << "\n";
    return 0;
}

int cmd_enumerate(int order, int threads, const std::string& output) {
    Out out(output);
    GraphStream stream(order, threads);
    while (auto g = stream.next()) out.stream() << graph6_encode(*g) << "\n";
    return 0;
}

int cmd_reduce(const std::string& variant_name, const std::string& name,
               const std::string& input, bool check, bool labels, const std::string& output) {
    GadgetVariant variant = variant_name == "g1" ? GadgetVariant::g1 : GadgetVariant::g2;
    std::vector<Graph> sources;
    if (!name.empty()) {
        auto which = named_by_string(name);
        if (!which) throw GraphError("unknown named graph: " + name);
        sources.push_back(named(*which));
    } else {
        sources = read_graphs(input);
    }

    Out out(output);
    bool all_ok = true;
    for (const Graph& src : sources) {
        ReducedInstance inst = gadget_transform(src, variant);
        out.stream() << graph6_encode(inst.output) << "\n";
        if (labels) std::cerr << inst.label_map_text();
        if (!check) continue;
        ReductionCheck rc = verify_reduction_instance(inst);
        DegreeProfile dp = degree_profile(inst.output);
        LocalProfile lp = local_profile(inst.output);
        std::cerr << "reduce " << variant_name << ": " << src.n() << " -> " << inst.output.n()
                  << " vertices, max degree " << dp.max_degree << ", local diameter bound "
                  << (lp.min_k ? std::to_string(*lp.min_k) : std::string("inf"))
                  << (lp.locally_isometric ? " (locally isometric)" : "") << "\n";
        std::cerr << "  degree structure " << (rc.degree_ok ? "ok" : "BAD")
                  << ", local bound " << (rc.local_bound_ok ? "ok" : "BAD")
                  << ", neighborhood stars " << (rc.star_ok ? "ok" : "BAD");
        if (rc.equivalence_ok)
            std::cerr << ", source hamiltonian " << (*rc.ham_source ? "yes" : "no")
                      << ", reduced hamiltonian " << (*rc.ham_reduced ? "yes" : "no")
                      << ", equivalence " << (*rc.equivalence_ok ? "ok" : "BAD");
        else
            std::cerr << ", hamiltonicity skipped (size budget)";
        std::cerr << "\n";
        bool ok = rc.degree_ok && rc.local_bound_ok && rc.star_ok &&
                  (!rc.equivalence_ok || *rc.equivalence_ok);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

int corrupt_selftest() {
    // the join of an edge with three isolated vertices and its known
    // non-extendable 4-cycle; the inverted expectation must fire exactly once
    Graph g = join(Graph::complete(2), Graph::empty_graph(3));
    Cycle c = Cycle::in(g, std::vector<int>{0, 2, 1, 3});
    LemmaSuiteOptions opts;
    opts.corrupt_2_1_2 = true;
    LemmaSuiteResult res = lemma_suite(g, c, opts);
    for (const LemmaViolation& v : res.violations) std::cout << v.to_string() << "\n";
    std::cerr << "corrupted self-test: " << res.violations.size()
              << " violation(s), expected exactly 1\n";
    return res.violations.size() == 1 ? 0 : 1;
}

int cmd_verify(const std::string& theorem, int min_order, int max_order,
               const std::string& corpus, bool lemmas, bool degree2, bool selftest,
               int threads, const std::string& input, const std::string& output) {
    if (selftest) return corrupt_selftest();
    if (theorem.empty() && !lemmas && !degree2) {
        std::cerr << "verify needs --theorem, --lemmas or --degree2\n";
        return 2;
    }
    Out out(output);

    if (!theorem.empty()) {
        CampaignReport rep;
        if (corpus.empty()) {
            rep = run_campaign(theorem, min_order, max_order, threads);
        } else {
            std::vector<Graph> graphs = read_graphs(corpus);
            rep = run_campaign(theorem, min_order, max_order, graphs, threads);
        }
        out.stream() << rep.to_json() << "\n";
        std::cerr << rep.summary() << "\n";
        return rep.violations.empty() ? 0 : 1;
    }

    bool any_violation = false;
    for (const Graph& g : read_graphs(input)) {
        std::string g6 = graph6_encode(g);
        if (degree2) {
            Degree2DeletionResult res = degree2_deletion_check(g);
            if (res.skipped) {
                std::cerr << g6 << ": skipped (" << res.skip_reason << ")\n";
                continue;
            }
            for (const LemmaViolation& v : res.violations)
                out.stream() << v.to_string() << "\n";
            std::cerr << g6 << ": " << res.violations.size() << " violation(s)\n";
            any_violation = any_violation || !res.violations.empty();
        }
        if (lemmas) {
            ExtendabilityReport er = extendability_report(g);
            if (!er.witness) {
                std::cerr << g6 << ": no non-extendable cycle, nothing to check\n";
                continue;
            }
            LemmaSuiteResult res = lemma_suite(g, *er.witness);
            for (const LemmaViolation& v : res.violations)
                out.stream() << v.to_string() << "\n";
            std::cerr << g6 << ": " << res.violations.size() << " violation(s), "
                      << res.skips.size() << " lemma(s) skipped\n";
            any_violation = any_violation || !res.violations.empty();
        }
    }
    return any_violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle structure toolkit for locally isometric graphs"};
    app.require_subcommand(1);
    std::string input = "-", output = "-";
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads for sharded operations");

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", input, "graph6 input file, - for stdin");
        sub->add_option("-o,--output", output, "output file, - for stdout");
    };

    CLI::App* check = app.add_subcommand("check", "local neighborhood and degree profiles");
    add_io(check);
    CLI::App* spectrum = app.add_subcommand("spectrum", "girth, circumference, pancyclicity");
    add_io(spectrum);
    CLI::App* extend = app.add_subcommand("extend", "cycle extendability report");
    add_io(extend);
    CLI::App* classify = app.add_subcommand("classify", "match against the exception catalog");
    add_io(classify);

    CLI::App* generate = app.add_subcommand("generate", "emit catalog graphs as graph6");
    std::string family, name;
    int order = 0, shutters = 1, max_degree = 5;
    bool list_names = false;
    generate->add_option("--family", family,
                         "highrise | singly_shuttered | doubly_shuttered | shuttered");
    generate->add_option("--order", order, "number of vertices");
    generate->add_option("--shutters", shutters, "shutter count for --family shuttered");
    generate->add_option("--max-degree", max_degree, "degree cap for --family shuttered");
    generate->add_option("--name", name, "a named graph from the catalog");
    generate->add_flag("--list", list_names, "list the named graphs and exit");
    generate->add_option("-o,--output", output, "output file, - for stdout");

    CLI::App* enumerate = app.add_subcommand("enumerate", "connected graphs of one order, "
                                                          "up to isomorphism");
    int enum_order = 0;
    enumerate->add_option("--order", enum_order, "number of vertices (1..8)")->required();
    enumerate->add_option("-o,--output", output, "output file, - for stdout");

    CLI::App* reduce = app.add_subcommand("reduce", "vertex-to-triangle hamiltonicity gadget");
    std::string variant = "g1";
    bool check_flag = false, labels = false;
    reduce->add_option("--variant", variant, "g1 (max degree 7) or g2 (max degree 8)")
        ->check(CLI::IsMember({"g1", "g2"}));
    reduce->add_option("--name", name, "use a named graph as the source");
    reduce->add_flag("--check", check_flag, "verify the transformed instance");
    reduce->add_flag("--labels", labels, "print the gadget label map to stderr");
    add_io(reduce);

    CLI::App* verify = app.add_subcommand("verify", "theorem campaigns and lemma suites");
    std::string theorem, corpus;
    int min_order = 1, max_order = 8;
    bool lemmas = false, degree2 = false, selftest = false;
    verify->add_option("--theorem", theorem, "campaign id: delta4 thm3_1 thm4_1 cor4_2 "
                                             "thm4_5 cor3_2 lem4_3")
        ->check(CLI::IsMember(theorem_ids()));
    verify->add_option("--min-order", min_order, "smallest order swept");
    verify->add_option("--max-order", max_order, "largest order swept");
    verify->add_option("--corpus", corpus, "graph6 corpus file instead of the built-in "
                                           "enumeration");
    verify->add_flag("--lemmas", lemmas, "run the non-extendable cycle lemma suite on "
                                         "input graphs");
    verify->add_flag("--degree2", degree2, "run the degree-2 deletion check on input graphs");
    verify->add_flag("--selftest-corrupt", selftest,
                     "run the deliberately corrupted assertion self-test")
        ->group("");  // hidden
    add_io(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*check) return cmd_check(input, output);
        if (*spectrum) return cmd_spectrum(input, output);
        if (*extend) return cmd_extend(input, output);
        if (*classify) return cmd_classify(input, output);
        if (*generate)
            return cmd_generate(family, name, order, shutters, max_degree, list_names, output);
        if (*enumerate) return cmd_enumerate(enum_order, threads, output);
        if (*reduce) return cmd_reduce(variant, name, input, check_flag, labels, output);
        if (*verify)
            return cmd_verify(theorem, min_order, max_order, corpus, lemmas, degree2, selftest,
                              threads, input, output);
    } catch (const Graph6Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
