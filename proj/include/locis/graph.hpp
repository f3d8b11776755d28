#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace locis {

// Everything in this library works on simple undirected graphs with at most
// 64 vertices, so a neighborhood fits in one machine word.
constexpr int kMaxVertices = 64;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation is asked to exceed its documented size budget.
struct UnsupportedSize : GraphError {
    using GraphError::GraphError;
};

// Subset of vertices of a host graph, stored as a bitmask.
struct VertexSet {
    uint64_t bits = 0;

    static VertexSet of(std::span<const int> verts);
    static VertexSet range(int n);  // {0, ..., n-1}

    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= uint64_t(1) << v; }
    void remove(int v) { bits &= ~(uint64_t(1) << v); }
    int count() const;
    bool empty() const { return bits == 0; }
    std::vector<int> to_vector() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Immutable simple graph on dense vertex ids 0..n-1.
class Graph {
  public:
    Graph() = default;

    // Validates endpoints, rejects self-loops, ignores duplicate edges.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    // Rows must already be a symmetric irreflexive relation (internal fast path).
    static Graph from_rows(int n, std::span<const uint64_t> rows);

    static Graph complete(int n);
    static Graph empty_graph(int n);
    static Graph path(int n);
    static Graph cycle_graph(int n);
    static Graph complete_bipartite(int a, int b);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    uint64_t row(int u) const { return rows_[u]; }
    int degree(int u) const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<uint64_t> rows_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_of;  // new id -> old id, ascending
    std::vector<int> new_id_of;  // old id -> new id, -1 if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// Empty optional means infinite (disconnected or n = 0).
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);

// Disjoint union plus all edges between the two sides; ids of g first.
Graph join(const Graph& g, const Graph& h);

// Strong product; vertex (u, v) gets id u * h.n() + v.
Graph strong_product(const Graph& g, const Graph& h);

struct TwinPair {
    int u, v;
    bool true_twin;  // closed neighborhoods equal (implies adjacent)
};

// All unordered twin pairs: true twins (N[u] = N[v]) and false twins (N(u) = N(v)).
std::vector<TwinPair> twin_pairs(const Graph& g);

bool are_true_twins(const Graph& g, int u, int v);

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sorted_degrees;  // ascending
    std::vector<int> degree2_vertices;
};

DegreeProfile degree_profile(const Graph& g);

}  // namespace locis
