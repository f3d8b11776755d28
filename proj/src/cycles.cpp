#include "locis/cycles.hpp"

#include <algorithm>
#include <bit>

namespace locis {

namespace {

uint64_t bit(int v) { return uint64_t(1) << v; }

// Every unvisited vertex still needs two usable cycle-neighbors, and all
// unvisited vertices must be reachable from the current endpoint.
bool prune_ok(const Graph& g, uint64_t visited, int cur, int start) {
    uint64_t unvisited = VertexSet::range(g.n()).bits & ~visited;
    if (!unvisited) return true;
    uint64_t usable = unvisited | bit(cur) | bit(start);
    for (uint64_t b = unvisited; b;) {
        int v = std::countr_zero(b);
        b &= b - 1;
        if (std::popcount(g.row(v) & usable) < 2) return false;
    }
    uint64_t seen = bit(cur), frontier = seen;
    uint64_t domain = unvisited | bit(cur);
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t f = frontier; f;) {
            next |= g.row(std::countr_zero(f));
            f &= f - 1;
        }
        frontier = next & domain & ~seen;
        seen |= frontier;
    }
    return (seen & unvisited) == unvisited;
}

struct HamSearch {
    const Graph& g;
    int n, start;
    std::vector<int> path;
    uint64_t visited = 0;
    // required-edge bookkeeping: per-vertex list of (neighbor, edge index)
    std::vector<std::vector<std::pair<int, int>>> req_at;
    std::vector<bool> req_used;
    int req_left = 0;

    explicit HamSearch(const Graph& gr) : g(gr), n(gr.n()), req_at(gr.n()) {}

    int unused_req_count(int v) const {
        int c = 0;
        for (auto [w, idx] : req_at[v])
            if (!req_used[idx]) c++;
        return c;
    }

    bool close_ok(int cur) {
        if (!g.adjacent(cur, start)) return false;
        if (req_left == 0) return true;
        if (req_left != 1) return false;
        for (auto [w, idx] : req_at[cur])
            if (!req_used[idx] && w == start) return true;
        return false;
    }

    bool extend(int cur) {
        if (int(path.size()) == n) return close_ok(cur);
        uint64_t cand = g.row(cur) & ~visited;
        // an unused required edge at a non-start vertex must be the next hop
        if (cur != start || path.size() > 1) {
            int forced = -1, nreq = 0;
            for (auto [w, idx] : req_at[cur])
                if (!req_used[idx]) {
                    nreq++;
                    forced = w;
                }
            if (nreq > 1) return false;
            if (nreq == 1) {
                if (visited & bit(forced)) return false;  // lost (closing handled above)
                cand &= bit(forced);
            }
        }
        while (cand) {
            int next = std::countr_zero(cand);
            cand &= cand - 1;
            int used_idx = -1;
            for (auto [w, idx] : req_at[cur])
                if (w == next && !req_used[idx]) used_idx = idx;
            if (used_idx >= 0) req_used[used_idx] = true, req_left--;
            visited |= bit(next);
            path.push_back(next);
            if (prune_ok(g, visited, next, start) && extend(next)) return true;
            path.pop_back();
            visited &= ~bit(next);
            if (used_idx >= 0) req_used[used_idx] = false, req_left++;
        }
        return false;
    }
};

std::optional<Cycle> ham_solve(const Graph& g, std::span<const std::pair<int, int>> required) {
    int n = g.n();
    if (n < 3) return std::nullopt;
    HamSearch s(g);
    for (auto [u, v] : required) {
        if (!g.adjacent(u, v)) throw GraphError("required edge not in graph");
        int idx = int(s.req_used.size());
        s.req_used.push_back(false);
        s.req_at[u].push_back({v, idx});
        s.req_at[v].push_back({u, idx});
        s.req_left++;
    }
    for (int v = 0; v < n; v++)
        if (s.unused_req_count(v) > 2) return std::nullopt;
    int start = 0;
    for (int v = 1; v < n; v++)
        if (g.degree(v) < g.degree(start)) start = v;
    s.start = start;
    s.visited = bit(start);
    s.path = {start};
    if (!s.extend(start)) return std::nullopt;
    return Cycle::in(g, s.path);
}

}  // namespace

Cycle Cycle::in(const Graph& g, std::span<const int> verts) {
    int t = int(verts.size());
    if (t < 3) throw GraphError("cycle needs at least 3 vertices");
    uint64_t seen = 0;
    for (int i = 0; i < t; i++) {
        int v = verts[i];
        if (v < 0 || v >= g.n()) throw GraphError("cycle vertex out of range");
        if (seen & bit(v)) throw GraphError("repeated vertex in cycle");
        seen |= bit(v);
        if (!g.adjacent(v, verts[(i + 1) % t])) throw GraphError("non-adjacent consecutive cycle vertices");
    }
    int mp = 0;
    for (int i = 1; i < t; i++)
        if (verts[i] < verts[mp]) mp = i;
    Cycle c;
    c.verts_.resize(t);
    int succ = verts[(mp + 1) % t], pred = verts[(mp + t - 1) % t];
    if (succ < pred)
        for (int i = 0; i < t; i++) c.verts_[i] = verts[(mp + i) % t];
    else
        for (int i = 0; i < t; i++) c.verts_[i] = verts[(mp + t - i) % t];
    return c;
}

int Cycle::at(int i) const {
    int t = length();
    return verts_[((i % t) + t) % t];
}

VertexSet Cycle::vertex_set() const {
    VertexSet s;
    for (int v : verts_) s.add(v);
    return s;
}

bool Cycle::is_valid_in(const Graph& g) const {
    for (int i = 0; i < length(); i++) {
        if (verts_[i] < 0 || verts_[i] >= g.n()) return false;
        if (!g.adjacent(verts_[i], verts_[(i + 1) % length()])) return false;
    }
    return true;
}

std::optional<Cycle> hamiltonian_cycle(const Graph& g) { return ham_solve(g, {}); }

std::optional<Cycle> hamiltonian_cycle_required(const Graph& g,
                                                std::span<const std::pair<int, int>> required) {
    return ham_solve(g, required);
}

bool has_hamiltonian_path(const Graph& g) {
    int n = g.n();
    if (n == 0) return false;
    if (n == 1) return true;
    if (!is_connected(g)) return false;
    uint64_t all = VertexSet::range(n).bits;
    // path endpoints may have one usable neighbor; everyone else needs two
    std::function<bool(int, uint64_t)> extend = [&](int cur, uint64_t visited) {
        if (visited == all) return true;
        uint64_t unvisited = all & ~visited;
        int deficient = 0;
        for (uint64_t b = unvisited; b;) {
            int v = std::countr_zero(b);
            b &= b - 1;
            int avail = std::popcount(g.row(v) & (unvisited | bit(cur)));
            if (avail == 0) return false;
            if (avail == 1) deficient++;
        }
        if (deficient > (g.row(cur) & unvisited ? 2 : 1)) return false;
        uint64_t cand = g.row(cur) & ~visited;
        while (cand) {
            int next = std::countr_zero(cand);
            cand &= cand - 1;
            if (extend(next, visited | bit(next))) return true;
        }
        return false;
    };
    for (int s = 0; s < n; s++)
        if (extend(s, bit(s))) return true;
    return false;
}

void for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& fn) {
    int n = g.n();
    std::vector<int> path;
    bool stop = false;
    // each cycle is generated once: minimum vertex first, smaller neighbor second
    std::function<void(int, int, uint64_t)> dfs = [&](int s, int cur, uint64_t visited) {
        if (stop) return;
        uint64_t cand = g.row(cur) & ~visited;
        while (cand && !stop) {
            int next = std::countr_zero(cand);
            cand &= cand - 1;
            if (next <= s) continue;
            path.push_back(next);
            // path excludes s itself, so >= 2 closes a triangle; emitting only
            // when the first step beats the last kills the mirrored traversal
            if (path.size() >= 2 && g.adjacent(next, s) && path[0] < next) {
                std::vector<int> verts;
                verts.push_back(s);
                verts.insert(verts.end(), path.begin(), path.end());
                if (!fn(Cycle::in(g, verts))) stop = true;
            }
            if (!stop) dfs(s, next, visited | bit(next));
            path.pop_back();
        }
    };
    for (int s = 0; s < n && !stop; s++) {
        path.clear();
        dfs(s, s, bit(s));
    }
}

namespace {

// Is there a cycle of length exactly len? Same canonical search restricted
// to a fixed depth.
bool has_cycle_of_length(const Graph& g, int len) {
    int n = g.n();
    std::function<bool(int, int, uint64_t, int)> dfs = [&](int s, int cur, uint64_t visited,
                                                           int depth) {
        if (depth == len - 1) return (g.row(cur) & bit(s)) != 0;
        uint64_t cand = g.row(cur) & ~visited;
        while (cand) {
            int next = std::countr_zero(cand);
            cand &= cand - 1;
            if (next <= s) continue;
            if (dfs(s, next, visited | bit(next), depth + 1)) return true;
        }
        return false;
    };
    // a cycle of length len has its minimum vertex at most n - len
    for (int s = 0; s + len <= n; s++)
        if (dfs(s, s, bit(s), 0)) return true;
    return false;
}

}  // namespace

CycleSpectrum cycle_spectrum(const Graph& g) {
    CycleSpectrum sp;
    for (int len = 3; len <= g.n(); len++)
        if (has_cycle_of_length(g, len)) sp.achieved_lengths.push_back(len);
    if (!sp.achieved_lengths.empty()) {
        sp.girth = sp.achieved_lengths.front();
        sp.circumference = sp.achieved_lengths.back();
        sp.weakly_pancyclic =
            int(sp.achieved_lengths.size()) == *sp.circumference - *sp.girth + 1;
        sp.pancyclic = *sp.girth == 3 && *sp.circumference == g.n() && sp.weakly_pancyclic;
        sp.hamiltonian = *sp.circumference == g.n();
    } else {
        sp.weakly_pancyclic = true;  // no cycles at all
    }
    return sp;
}

bool is_extendable(const Graph& g, const Cycle& c) {
    if (!c.is_valid_in(g)) throw GraphError("cycle is not valid in host graph");
    if (c.length() == g.n()) throw GraphError("is_extendable needs a non-Hamiltonian cycle");
    VertexSet cs = c.vertex_set();
    for (int v = 0; v < g.n(); v++) {
        if (cs.contains(v)) continue;
        VertexSet s = cs;
        s.add(v);
        if (hamiltonian_cycle(induced_subgraph(g, s).graph)) return true;
    }
    return false;
}

ExtendabilityReport extendability_report(const Graph& g) {
    if (g.n() > 24)
        throw UnsupportedSize("extendability_report supports n <= 24, got n = " +
                              std::to_string(g.n()));
    ExtendabilityReport rep;
    rep.every_vertex_on_triangle = true;
    for (int v = 0; v < g.n(); v++) {
        bool on_tri = false;
        uint64_t nb = g.row(v);
        while (nb && !on_tri) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            on_tri = (g.row(u) & g.row(v)) != 0;
        }
        if (!on_tri) {
            rep.every_vertex_on_triangle = false;
            break;
        }
    }
    rep.cycle_extendable = true;
    bool saw_cycle = false;
    for_each_cycle(g, [&](const Cycle& c) {
        saw_cycle = true;
        if (c.length() < g.n() && !is_extendable(g, c)) {
            rep.cycle_extendable = false;
            rep.witness = c;
            return false;
        }
        return true;
    });
    rep.acyclic = !saw_cycle;
    rep.fully_cycle_extendable = rep.cycle_extendable && rep.every_vertex_on_triangle;
    return rep;
}

}  // namespace locis
