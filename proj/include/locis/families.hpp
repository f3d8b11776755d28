#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locis/graph.hpp"

namespace locis {

// Highrise of order m >= 5: the strong product P2 x Pk (row-major ids,
// row a = 0..k-1, row b = k..2k-1) plus one apex (odd m, joined to the
// column-0 pair {0, k}) or two apexes (even m, one per end column).
Graph highrise(int m);

struct FamilyParams {
    int m;          // final order
    int r;          // number of added degree-2 shutter vertices
    int max_degree; // maximum degree of the result
};

// True-twin pairs of the base highrise with degree >= 4, in canonical order
// (ascending minimum vertex id). These are the pairs shutters may attach to.
std::vector<std::pair<int, int>> eligible_shutter_pairs(const Graph& base_highrise);

// Shuttered highrise: highrise(m - r) plus r shutter vertices, each joined
// to an eligible true-twin pair, keeping the maximum degree at max_degree.
// Default assignment is greedy (lowest pair first while its degree allows);
// pair_choice overrides it with explicit indices into the eligible pair list.
Graph shuttered_highrise(const FamilyParams& p, std::span<const int> pair_choice = {});

// Singly shuttered highrise S_n (max degree 5); S_5 is K2 + complement(K3).
Graph singly_shuttered(int n);

// Doubly shuttered highrise D_n (max degree 5, even order); D_6 is
// K2 + complement(K4).
Graph doubly_shuttered(int n);

enum class NamedGraph {
    k24_plus_k1,
    k2_join_k3bar,
    k2_join_k4bar,
    cube_q3,
    k33,
    heawood,
    petersen,
};

Graph named(NamedGraph which);
std::optional<NamedGraph> named_by_string(const std::string& name);
std::vector<std::string> named_graph_names();

struct ExceptionClass {
    enum Tag { SinglyShuttered, DoublyShuttered, K24PlusK1, K2JoinK3bar, NotExceptional } tag;
    int order = 0;  // set for the shuttered families

    std::string to_string() const;
    bool operator==(const ExceptionClass&) const = default;
};

// Which of the known non-fully-cycle-extendable families is G isomorphic to?
// Checks singly_shuttered, doubly_shuttered, k24_plus_k1, k2_join_k3bar in
// that order; first match wins. Supported for n <= 12.
ExceptionClass recognize_exception(const Graph& g);

}  // namespace locis
