#pragma once

#include <optional>
#include <vector>

#include "locis/graph.hpp"

namespace locis {

// Subgraph induced by the open neighborhood of v, with the relabeling map.
InducedSubgraph local_subgraph(const Graph& g, int v);

struct LocalProfile {
    // diameter of <N(v)> per vertex; empty optional means infinite
    // (disconnected neighborhood, or no neighbors at all)
    std::vector<std::optional<int>> neighborhood_diameter;
    // smallest k with every neighborhood diameter <= k; empty if some
    // neighborhood is disconnected
    std::optional<int> min_k;
    bool locally_connected = false;
    bool locally_isometric = false;    // min_k <= 2
    bool locally_traceable = false;    // every <N(v)> has a hamiltonian path
    bool locally_hamiltonian = false;  // every <N(v)> has a hamiltonian cycle
};

LocalProfile local_profile(const Graph& g);

bool is_locally_isometric(const Graph& g);

}  // namespace locis
