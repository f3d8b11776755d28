#include "locis/graph.hpp"

#include <algorithm>
#include <bit>

namespace locis {

VertexSet VertexSet::of(std::span<const int> verts) {
    VertexSet s;
    for (int v : verts) {
        if (v < 0 || v >= kMaxVertices) throw GraphError("vertex out of range for VertexSet");
        s.add(v);
    }
    return s;
}

VertexSet VertexSet::range(int n) {
    VertexSet s;
    s.bits = n >= 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    return s;
}

int VertexSet::count() const { return std::popcount(bits); }

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    uint64_t b = bits;
    while (b) {
        int v = std::countr_zero(b);
        out.push_back(v);
        b &= b - 1;
    }
    return out;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0 || n > kMaxVertices) throw GraphError("graph order must be between 0 and 64");
    Graph g;
    g.n_ = n;
    g.rows_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("self-loop rejected");
        g.rows_[u] |= uint64_t(1) << v;
        g.rows_[v] |= uint64_t(1) << u;
    }
    for (int u = 0; u < n; u++) g.edge_count_ += std::popcount(g.rows_[u]);
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const uint64_t> rows) {
    Graph g;
    g.n_ = n;
    g.rows_.assign(rows.begin(), rows.end());
    for (int u = 0; u < n; u++) g.edge_count_ += std::popcount(g.rows_[u]);
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::complete(int n) {
    std::vector<uint64_t> rows(n);
    uint64_t all = VertexSet::range(n).bits;
    for (int u = 0; u < n; u++) rows[u] = all & ~(uint64_t(1) << u);
    return from_rows(n, rows);
}

Graph Graph::empty_graph(int n) {
    std::vector<uint64_t> rows(n, 0);
    return from_rows(n, rows);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; i++) e.push_back({i, i + 1});
    return from_edges(n, e);
}

Graph Graph::cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle graph needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; i++) e.push_back({i, (i + 1) % n});
    return from_edges(n, e);
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; i++)
        for (int j = 0; j < b; j++) e.push_back({i, a + j});
    return from_edges(a + b, e);
}

int Graph::degree(int u) const { return std::popcount(rows_[u]); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; u++) {
        uint64_t b = rows_[u] >> (u + 1) << (u + 1);
        while (b) {
            out.push_back({u, std::countr_zero(b)});
            b &= b - 1;
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.bits >> g.n() != 0) throw GraphError("vertex set not contained in graph");
    InducedSubgraph out;
    out.vertex_of = s.to_vector();
    out.new_id_of.assign(g.n(), -1);
    int m = int(out.vertex_of.size());
    for (int i = 0; i < m; i++) out.new_id_of[out.vertex_of[i]] = i;
    std::vector<uint64_t> rows(m, 0);
    for (int i = 0; i < m; i++) {
        uint64_t nb = g.row(out.vertex_of[i]) & s.bits;
        while (nb) {
            rows[i] |= uint64_t(1) << out.new_id_of[std::countr_zero(nb)];
            nb &= nb - 1;
        }
    }
    out.graph = Graph::from_rows(m, rows);
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.n();
    if (n == 0) return false;
    uint64_t all = VertexSet::range(n).bits;
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            next |= g.row(std::countr_zero(frontier));
            frontier &= frontier - 1;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

std::optional<int> diameter(const Graph& g) {
    int n = g.n();
    if (n == 0) return std::nullopt;
    uint64_t all = VertexSet::range(n).bits;
    int diam = 0;
    for (int s = 0; s < n; s++) {
        uint64_t seen = uint64_t(1) << s;
        uint64_t frontier = seen;
        int depth = 0;
        while (seen != all) {
            uint64_t next = 0;
            while (frontier) {
                next |= g.row(std::countr_zero(frontier));
                frontier &= frontier - 1;
            }
            frontier = next & ~seen;
            if (!frontier) return std::nullopt;  // disconnected
            seen |= frontier;
            depth++;
        }
        diam = std::max(diam, depth);
    }
    return diam;
}

Graph join(const Graph& g, const Graph& h) {
    int n = g.n() + h.n();
    if (n > kMaxVertices) throw GraphError("join exceeds 64 vertices");
    std::vector<uint64_t> rows(n, 0);
    uint64_t gmask = VertexSet::range(g.n()).bits;
    uint64_t hmask = VertexSet::range(n).bits & ~gmask;
    for (int u = 0; u < g.n(); u++) rows[u] = g.row(u) | hmask;
    for (int v = 0; v < h.n(); v++) rows[g.n() + v] = (h.row(v) << g.n()) | gmask;
    return Graph::from_rows(n, rows);
}

Graph strong_product(const Graph& g, const Graph& h) {
    int n = g.n() * h.n();
    if (n > kMaxVertices) throw GraphError("strong product exceeds 64 vertices");
    std::vector<std::pair<int, int>> e;
    auto id = [&](int u, int v) { return u * h.n() + v; };
    for (int u1 = 0; u1 < g.n(); u1++)
        for (int v1 = 0; v1 < h.n(); v1++)
            for (int u2 = u1; u2 < g.n(); u2++)
                for (int v2 = 0; v2 < h.n(); v2++) {
                    if (id(u2, v2) <= id(u1, v1)) continue;
                    bool gu = u1 == u2, hv = v1 == v2;
                    bool ga = g.adjacent(u1, u2), ha = h.adjacent(v1, v2);
                    if ((gu && ha) || (hv && ga) || (ga && ha)) e.push_back({id(u1, v1), id(u2, v2)});
                }
    return Graph::from_edges(n, e);
}

bool are_true_twins(const Graph& g, int u, int v) {
    uint64_t cu = g.row(u) | (uint64_t(1) << u);
    uint64_t cv = g.row(v) | (uint64_t(1) << v);
    return u != v && cu == cv;
}

std::vector<TwinPair> twin_pairs(const Graph& g) {
    std::vector<TwinPair> out;
    for (int u = 0; u < g.n(); u++)
        for (int v = u + 1; v < g.n(); v++) {
            if (are_true_twins(g, u, v))
                out.push_back({u, v, true});
            else if (g.row(u) == g.row(v) && !g.adjacent(u, v))
                out.push_back({u, v, false});
        }
    return out;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    for (int u = 0; u < g.n(); u++) {
        int d = g.degree(u);
        p.sorted_degrees.push_back(d);
        if (d == 2) p.degree2_vertices.push_back(u);
    }
    std::sort(p.sorted_degrees.begin(), p.sorted_degrees.end());
    p.min_degree = g.n() ? p.sorted_degrees.front() : 0;
    p.max_degree = g.n() ? p.sorted_degrees.back() : 0;
    return p;
}

}  // namespace locis
