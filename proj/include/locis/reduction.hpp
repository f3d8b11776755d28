#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locis/cycles.hpp"
#include "locis/graph.hpp"

namespace locis {

// Bipartition (U, V) of a connected bipartite graph; empty if odd cycle found.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

struct OneFactorization {
    // factors[f][i] = the V-side partner of the i-th U-side vertex in factor f
    std::vector<std::vector<int>> factors;  // three perfect matchings
    std::vector<int> u_side, v_side;        // ascending original ids
};

// Splits a cubic bipartite graph into three perfect matchings, found by three
// rounds of augmenting-path matching with ascending-id tie-breaks.
OneFactorization one_factorization(const Graph& g, VertexSet u_part, VertexSet v_part);

enum class GadgetVariant { g1, g2 };

struct GadgetLabel {
    int side;   // 0 = U, 1 = V
    int index;  // 1..p, by ascending original id within the side
    int layer;  // 1..3
};

struct ReducedInstance {
    GadgetVariant variant;
    Graph source;
    Graph output;
    OneFactorization factors;
    std::vector<GadgetLabel> label_of;  // output id -> gadget label

    int output_id(int side, int index, int layer) const;
    // sidecar text: one "side index layer -> id" line per gadget vertex
    std::string label_map_text() const;
};

// Vertex-to-triangle reduction. Every source vertex becomes a triangle
// x^1 x^2 x^3; layer-1/2 gadget vertices are wired across the sides
// according to the roles the three 1-factors assign to each edge. Variant
// g1 gives maximum degree 7, variant g2 maximum degree 8.
ReducedInstance gadget_transform(const Graph& g, GadgetVariant variant, VertexSet u_part,
                                 VertexSet v_part);
ReducedInstance gadget_transform(const Graph& g, GadgetVariant variant);  // finds the parts

// Hamiltonian cycle of the source lifted through the gadgets (validated).
Cycle lift_cycle(const ReducedInstance& inst, const Cycle& source_cycle);

// Reads the layer-3 vertices of a reduced-instance hamiltonian cycle in
// traversal order back to a source hamiltonian cycle (validated).
Cycle project_cycle(const ReducedInstance& inst, const Cycle& reduced_cycle);

// Hamiltonicity with a preprocessing pass that contracts forced paths
// through degree-2 vertices into required edges.
std::optional<Cycle> hamiltonian_cycle_with_contraction(const Graph& g);

struct ReductionCheck {
    bool degree_ok = false;      // max degree 7/8, every layer-3 vertex degree 2
    bool local_bound_ok = false; // g1: every neighborhood diameter <= 3; g2: <= 2 exactly
    bool star_ok = false;        // spanning (subdivided) star inside layer-1/2 neighborhoods
    std::optional<bool> ham_source;   // absent when past the size budget
    std::optional<bool> ham_reduced;
    std::optional<bool> equivalence_ok;
};

// Structure checks always run; Hamiltonicity fields are filled when the
// output has at most 48 vertices.
ReductionCheck verify_reduction_instance(const ReducedInstance& inst);

}  // namespace locis
