#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "locis/graph.hpp"

namespace locis {

// A cycle in a host graph, stored in canonical rotation: minimum vertex
// first, then the smaller of its two cycle-neighbors.
class Cycle {
  public:
    // Validates against the host: >= 3 distinct vertices, consecutive
    // (cyclically) adjacent. Normalizes rotation and direction.
    static Cycle in(const Graph& g, std::span<const int> verts);

    int length() const { return int(verts_.size()); }
    const std::vector<int>& verts() const { return verts_; }
    int at(int i) const;  // cyclic indexing, any integer
    VertexSet vertex_set() const;
    bool is_valid_in(const Graph& g) const;

    bool operator==(const Cycle& o) const { return verts_ == o.verts_; }

  private:
    std::vector<int> verts_;
};

// Deterministic backtracking solver (min-degree start, ascending neighbor
// order, degree-2 / connectivity pruning).
std::optional<Cycle> hamiltonian_cycle(const Graph& g);

// As above but every listed edge must appear on the cycle.
std::optional<Cycle> hamiltonian_cycle_required(const Graph& g,
                                                std::span<const std::pair<int, int>> required);

bool has_hamiltonian_path(const Graph& g);

// Calls fn for every cycle of g exactly once (canonical rotation order);
// stops early if fn returns false. Intended for n <= 24.
void for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& fn);

struct CycleSpectrum {
    std::optional<int> girth;          // empty iff acyclic
    std::optional<int> circumference;  // empty iff acyclic
    std::vector<int> achieved_lengths;
    bool weakly_pancyclic = false;  // all lengths girth..circumference (acyclic: true)
    bool pancyclic = false;         // all lengths 3..n
    bool hamiltonian = false;
};

// Exact per-length existence search.
CycleSpectrum cycle_spectrum(const Graph& g);

// Does some cycle on V(C) plus one more vertex exist? Precondition: C is a
// valid non-Hamiltonian cycle of g.
bool is_extendable(const Graph& g, const Cycle& c);

struct ExtendabilityReport {
    bool cycle_extendable = false;
    bool every_vertex_on_triangle = false;
    bool fully_cycle_extendable = false;
    bool acyclic = false;  // no cycle at all; cycle_extendable is vacuously true
    std::optional<Cycle> witness;  // first non-extendable cycle found
};

// Exhaustive check over all cycles; supported for n <= 24.
ExtendabilityReport extendability_report(const Graph& g);

}  // namespace locis
