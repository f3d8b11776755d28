#include "locis/local_props.hpp"

#include "locis/cycles.hpp"

namespace locis {

InducedSubgraph local_subgraph(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw GraphError("vertex out of range");
    VertexSet s;
    s.bits = g.row(v);
    return induced_subgraph(g, s);
}

LocalProfile local_profile(const Graph& g) {
    LocalProfile p;
    p.locally_connected = p.locally_traceable = p.locally_hamiltonian = g.n() > 0;
    int worst = 0;
    bool infinite = g.n() == 0;
    for (int v = 0; v < g.n(); v++) {
        Graph nb = local_subgraph(g, v).graph;
        auto d = diameter(nb);
        p.neighborhood_diameter.push_back(d);
        if (!d) {
            infinite = true;
            p.locally_connected = false;
        } else {
            worst = std::max(worst, *d);
        }
        if (!has_hamiltonian_path(nb)) p.locally_traceable = false;
        if (!hamiltonian_cycle(nb)) p.locally_hamiltonian = false;
    }
    if (!infinite) p.min_k = worst;
    p.locally_isometric = p.min_k && *p.min_k <= 2;
    return p;
}

bool is_locally_isometric(const Graph& g) {
    if (g.n() == 0) return false;
    for (int v = 0; v < g.n(); v++) {
        auto d = diameter(local_subgraph(g, v).graph);
        if (!d || *d > 2) return false;
    }
    return true;
}

}  // namespace locis
