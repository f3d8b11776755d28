#include "locis/families.hpp"

#include <algorithm>

#include "locis/iso.hpp"

namespace locis {

Graph highrise(int m) {
    if (m < 5) throw GraphError("highrise needs order >= 5");
    // odd m: 2k grid vertices plus one apex; even m: 2k plus two apexes
    int k = m % 2 == 1 ? (m - 1) / 2 : (m - 2) / 2;
    Graph grid = strong_product(Graph::path(2), Graph::path(k));
    std::vector<std::pair<int, int>> e = grid.edges();
    if (m % 2 == 1) {
        e.push_back({2 * k, 0});
        e.push_back({2 * k, k});
    } else {
        e.push_back({2 * k, 0});
        e.push_back({2 * k, k});
        e.push_back({2 * k + 1, k - 1});
        e.push_back({2 * k + 1, 2 * k - 1});
    }
    return Graph::from_edges(m, e);
}

std::vector<std::pair<int, int>> eligible_shutter_pairs(const Graph& base) {
    std::vector<std::pair<int, int>> out;
    for (const auto& tp : twin_pairs(base))
        if (tp.true_twin && base.degree(tp.u) >= 4) out.push_back({tp.u, tp.v});
    std::sort(out.begin(), out.end());
    return out;
}

Graph shuttered_highrise(const FamilyParams& p, std::span<const int> pair_choice) {
    if (p.max_degree < 5) throw GraphError("shuttered highrise needs max degree >= 5");
    if (p.r < p.max_degree - 4) throw GraphError("too few shutters for requested max degree");
    if (p.m < p.r + 5) throw GraphError("order too small for shutter count");
    int base_order = p.m - p.r;
    long pairs_even = (base_order - 2) / 2, pairs_odd = (base_order - 3) / 2;
    bool capacity = base_order % 2 == 0 ? pairs_even * (p.max_degree - 5) >= p.r - 2
                                        : pairs_odd * (p.max_degree - 5) >= p.r - 1;
    if (!capacity) throw GraphError("shutter count exceeds twin-pair capacity");

    Graph base = highrise(base_order);
    auto pairs = eligible_shutter_pairs(base);
    std::vector<int> deg(base_order);
    for (int v = 0; v < base_order; v++) deg[v] = base.degree(v);

    std::vector<int> assign;
    if (!pair_choice.empty()) {
        if (int(pair_choice.size()) != p.r) throw GraphError("pair_choice size must equal r");
        assign.assign(pair_choice.begin(), pair_choice.end());
    } else {
        for (int s = 0; s < p.r; s++) {
            int pick = -1;
            for (int i = 0; i < int(pairs.size()) && pick < 0; i++)
                if (deg[pairs[i].first] <= p.max_degree - 1) pick = i;
            if (pick < 0) throw GraphError("no eligible twin pair left for shutter");
            assign.push_back(pick);
            deg[pairs[pick].first]++;
            deg[pairs[pick].second]++;
        }
    }

    std::vector<std::pair<int, int>> e = base.edges();
    for (int s = 0; s < p.r; s++) {
        int i = assign[s];
        if (i < 0 || i >= int(pairs.size())) throw GraphError("pair_choice index out of range");
        e.push_back({base_order + s, pairs[i].first});
        e.push_back({base_order + s, pairs[i].second});
    }
    Graph g = Graph::from_edges(p.m, e);
    if (degree_profile(g).max_degree != p.max_degree)
        throw GraphError("shutter assignment does not realize requested max degree");
    return g;
}

Graph singly_shuttered(int n) {
    if (n < 5) throw GraphError("singly shuttered highrise needs order >= 5");
    if (n == 5) return join(Graph::complete(2), Graph::empty_graph(3));
    return shuttered_highrise({n, 1, 5});
}

Graph doubly_shuttered(int n) {
    if (n == 6) return join(Graph::complete(2), Graph::empty_graph(4));
    if (n < 8 || n % 2 != 0)
        throw GraphError("doubly shuttered highrise needs order 6 or an even order >= 8");
    return shuttered_highrise({n, 2, 5});
}

Graph named(NamedGraph which) {
    switch (which) {
        case NamedGraph::k24_plus_k1:
            return join(Graph::complete_bipartite(2, 4), Graph::complete(1));
        case NamedGraph::k2_join_k3bar:
            return join(Graph::complete(2), Graph::empty_graph(3));
        case NamedGraph::k2_join_k4bar:
            return join(Graph::complete(2), Graph::empty_graph(4));
        case NamedGraph::cube_q3: {
            std::vector<std::pair<int, int>> e;
            for (int u = 0; u < 8; u++)
                for (int b = 0; b < 3; b++)
                    if (u < (u ^ (1 << b))) e.push_back({u, u ^ (1 << b)});
            return Graph::from_edges(8, e);
        }
        case NamedGraph::k33:
            return Graph::complete_bipartite(3, 3);
        case NamedGraph::heawood: {
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < 14; i++) e.push_back({i, (i + 1) % 14});
            for (int i = 0; i < 14; i += 2) e.push_back({i, (i + 5) % 14});
            return Graph::from_edges(14, e);
        }
        case NamedGraph::petersen: {
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < 5; i++) {
                e.push_back({i, (i + 1) % 5});
                e.push_back({5 + i, 5 + (i + 2) % 5});
                e.push_back({i, 5 + i});
            }
            return Graph::from_edges(10, e);
        }
    }
    throw GraphError("unknown named graph");
}

static const std::pair<const char*, NamedGraph> kNamed[] = {
    {"k24_plus_k1", NamedGraph::k24_plus_k1}, {"k2_join_k3bar", NamedGraph::k2_join_k3bar},
    {"k2_join_k4bar", NamedGraph::k2_join_k4bar}, {"cube_q3", NamedGraph::cube_q3},
    {"k33", NamedGraph::k33}, {"heawood", NamedGraph::heawood}, {"petersen", NamedGraph::petersen},
};

std::optional<NamedGraph> named_by_string(const std::string& name) {
    for (auto [s, g] : kNamed)
        if (name == s) return g;
    return std::nullopt;
}

std::vector<std::string> named_graph_names() {
    std::vector<std::string> out;
    for (auto [s, g] : kNamed) out.push_back(s);
    return out;
}

std::string ExceptionClass::to_string() const {
    switch (tag) {
        case SinglyShuttered: return "S_" + std::to_string(order);
        case DoublyShuttered: return "D_" + std::to_string(order);
        case K24PlusK1: return "K_{2,4}+K_1";
        case K2JoinK3bar: return "K_2+3K_1";
        case NotExceptional: return "not_exceptional";
    }
    return "?";
}

ExceptionClass recognize_exception(const Graph& g) {
    int n = g.n();
    if (n > 12)
        throw UnsupportedSize("recognize_exception supports n <= 12, got n = " +
                              std::to_string(n));
    if (n >= 5 && are_isomorphic(g, singly_shuttered(n)))
        return {ExceptionClass::SinglyShuttered, n};
    if ((n == 6 || (n >= 8 && n % 2 == 0)) && are_isomorphic(g, doubly_shuttered(n)))
        return {ExceptionClass::DoublyShuttered, n};
    if (n == 7 && are_isomorphic(g, named(NamedGraph::k24_plus_k1)))
        return {ExceptionClass::K24PlusK1, 7};
    if (n == 5 && are_isomorphic(g, named(NamedGraph::k2_join_k3bar)))
        return {ExceptionClass::K2JoinK3bar, 5};
    return {ExceptionClass::NotExceptional, n};
}

}  // namespace locis
