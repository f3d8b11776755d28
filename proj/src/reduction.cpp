#include "locis/reduction.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "locis/local_props.hpp"

namespace locis {

namespace {
uint64_t bit(int v) { return uint64_t(1) << v; }
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    VertexSet parts[2];
    for (int s = 0; s < g.n(); s++) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue = {s};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            parts[color[u]].add(u);
            uint64_t nb = g.row(u);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(parts[0], parts[1]);
}

OneFactorization one_factorization(const Graph& g, VertexSet u_part, VertexSet v_part) {
    if ((u_part.bits & v_part.bits) || (u_part.bits | v_part.bits) != VertexSet::range(g.n()).bits)
        throw GraphError("parts must partition the vertex set");
    for (int v = 0; v < g.n(); v++)
        if (g.degree(v) != 3) throw GraphError("one_factorization needs a 3-regular graph");
    for (auto [a, b] : g.edges())
        if (u_part.contains(a) == u_part.contains(b))
            throw GraphError("edge inside one part; graph is not bipartite for these parts");
    OneFactorization f;
    f.u_side = u_part.to_vector();
    f.v_side = v_part.to_vector();
    int p = int(f.u_side.size());
    if (int(f.v_side.size()) != p) throw GraphError("parts of unequal size");

    std::vector<uint64_t> avail(g.n());
    for (int v = 0; v < g.n(); v++) avail[v] = g.row(v);
    std::vector<int> vindex(g.n(), -1);
    for (int j = 0; j < p; j++) vindex[f.v_side[j]] = j;

    for (int round = 0; round < 3; round++) {
        std::vector<int> match_v(p, -1);  // v index -> u index
        // augmenting-path matching, ascending ids
        std::function<bool(int, std::vector<bool>&)> augment = [&](int ui,
                                                                   std::vector<bool>& used) {
            uint64_t nb = avail[f.u_side[ui]];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                int wj = vindex[w];
                if (used[wj]) continue;
                used[wj] = true;
                if (match_v[wj] < 0 || augment(match_v[wj], used)) {
                    match_v[wj] = ui;
                    return true;
                }
            }
            return false;
        };
        for (int ui = 0; ui < p; ui++) {
            std::vector<bool> used(p, false);
            if (!augment(ui, used))
                throw GraphError("no perfect matching left; input is not cubic bipartite");
        }
        std::vector<int> factor(p, -1);
        for (int wj = 0; wj < p; wj++) factor[match_v[wj]] = f.v_side[wj];
        for (int ui = 0; ui < p; ui++) {
            avail[f.u_side[ui]] &= ~bit(factor[ui]);
            avail[factor[ui]] &= ~bit(f.u_side[ui]);
        }
        f.factors.push_back(factor);
    }
    return f;
}

int ReducedInstance::output_id(int side, int index, int layer) const {
    int p = int(factors.u_side.size());
    return (side == 0 ? 0 : 3 * p) + 3 * (index - 1) + (layer - 1);
}

std::string ReducedInstance::label_map_text() const {
    std::string out;
    for (int id = 0; id < output.n(); id++) {
        const GadgetLabel& l = label_of[id];
        out += (l.side == 0 ? "U " : "V ");
        out += std::to_string(l.index) + " " + std::to_string(l.layer) + " -> " +
               std::to_string(id) + "\n";
    }
    return out;
}

ReducedInstance gadget_transform(const Graph& g, GadgetVariant variant, VertexSet u_part,
                                 VertexSet v_part) {
    ReducedInstance inst;
    inst.variant = variant;
    inst.source = g;
    inst.factors = one_factorization(g, u_part, v_part);
    int p = int(inst.factors.u_side.size());
    int n_out = 6 * p;
    if (n_out > kMaxVertices) throw GraphError("reduced instance exceeds 64 vertices");

    inst.label_of.resize(n_out);
    for (int i = 1; i <= p; i++)
        for (int layer = 1; layer <= 3; layer++) {
            inst.label_of[3 * (i - 1) + layer - 1] = {0, i, layer};
            inst.label_of[3 * p + 3 * (i - 1) + layer - 1] = {1, i, layer};
        }
    auto uid = [&](int i, int layer) { return 3 * (i - 1) + layer - 1; };
    auto vid = [&](int j, int layer) { return 3 * p + 3 * (j - 1) + layer - 1; };

    std::vector<int> vindex(g.n(), -1);
    for (int j = 0; j < p; j++) vindex[inst.factors.v_side[j]] = j + 1;

    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= p; i++) {
        e.push_back({uid(i, 1), uid(i, 2)});
        e.push_back({uid(i, 2), uid(i, 3)});
        e.push_back({uid(i, 1), uid(i, 3)});
        e.push_back({vid(i, 1), vid(i, 2)});
        e.push_back({vid(i, 2), vid(i, 3)});
        e.push_back({vid(i, 1), vid(i, 3)});
    }
    for (int i = 1; i <= p; i++) {
        int j = vindex[inst.factors.factors[0][i - 1]];
        int k = vindex[inst.factors.factors[1][i - 1]];
        int l = vindex[inst.factors.factors[2][i - 1]];
        if (variant == GadgetVariant::g1) {
            for (int t : {j, k, l}) e.push_back({uid(i, 1), vid(t, 1)});
            e.push_back({uid(i, 1), vid(j, 2)});
            e.push_back({uid(i, 1), vid(l, 2)});
            for (int t : {j, k, l}) e.push_back({uid(i, 2), vid(t, 2)});
            e.push_back({uid(i, 2), vid(k, 1)});
            e.push_back({uid(i, 2), vid(l, 1)});
        } else {
            for (int t : {j, k, l}) {
                e.push_back({uid(i, 1), vid(t, 1)});
                e.push_back({uid(i, 1), vid(t, 2)});
                e.push_back({uid(i, 2), vid(t, 1)});
                e.push_back({uid(i, 2), vid(t, 2)});
            }
        }
    }
    inst.output = Graph::from_edges(n_out, e);
    return inst;
}

ReducedInstance gadget_transform(const Graph& g, GadgetVariant variant) {
    auto parts = bipartition(g);
    if (!parts) throw GraphError("gadget_transform needs a bipartite input");
    return gadget_transform(g, variant, parts->first, parts->second);
}

Cycle lift_cycle(const ReducedInstance& inst, const Cycle& source_cycle) {
    const Graph& src = inst.source;
    if (!source_cycle.is_valid_in(src) || source_cycle.length() != src.n())
        throw GraphError("lift_cycle needs a hamiltonian cycle of the source");
    int p = int(inst.factors.u_side.size());
    std::vector<int> side_of(src.n(), -1), index_of(src.n(), -1);
    for (int i = 0; i < p; i++) {
        side_of[inst.factors.u_side[i]] = 0;
        index_of[inst.factors.u_side[i]] = i + 1;
        side_of[inst.factors.v_side[i]] = 1;
        index_of[inst.factors.v_side[i]] = i + 1;
    }
    std::vector<int> seq;
    for (int t = 0; t < source_cycle.length(); t++) {
        int x = source_cycle.at(t);
        int i = index_of[x];
        if (side_of[x] == 0)
            for (int layer : {2, 3, 1}) seq.push_back(inst.output_id(0, i, layer));
        else
            for (int layer : {1, 3, 2}) seq.push_back(inst.output_id(1, i, layer));
    }
    return Cycle::in(inst.output, seq);  // validates every hop
}

Cycle project_cycle(const ReducedInstance& inst, const Cycle& reduced_cycle) {
    if (!reduced_cycle.is_valid_in(inst.output) || reduced_cycle.length() != inst.output.n())
        throw GraphError("project_cycle needs a hamiltonian cycle of the reduced instance");
    std::vector<int> seq;
    for (int t = 0; t < reduced_cycle.length(); t++) {
        const GadgetLabel& l = inst.label_of[reduced_cycle.at(t)];
        if (l.layer != 3) continue;
        seq.push_back(l.side == 0 ? inst.factors.u_side[l.index - 1]
                                  : inst.factors.v_side[l.index - 1]);
    }
    if (int(seq.size()) != inst.source.n())
        throw GraphError("layer-3 traversal does not cover the source");
    return Cycle::in(inst.source, seq);  // validates adjacency and distinctness
}

std::optional<Cycle> hamiltonian_cycle_with_contraction(const Graph& g) {
    int n = g.n();
    if (n < 3 || !is_connected(g)) return std::nullopt;
    for (int v = 0; v < n; v++)
        if (g.degree(v) < 2) return std::nullopt;
    bool all_deg2 = true;
    for (int v = 0; v < n && all_deg2; v++) all_deg2 = g.degree(v) == 2;
    if (all_deg2) {
        // the graph is a single cycle
        std::vector<int> seq = {0};
        int prev = 0, cur = std::countr_zero(g.row(0));
        while (cur != 0) {
            seq.push_back(cur);
            uint64_t nb = g.row(cur) & ~bit(prev);
            prev = cur;
            cur = std::countr_zero(nb);
        }
        return Cycle::in(g, seq);
    }

    // walk maximal chains of degree-2 vertices between branch vertices
    struct Chain {
        int a, b;                  // branch endpoints
        std::vector<int> interior; // oriented a -> b
    };
    std::vector<Chain> chains;
    std::vector<bool> in_chain(n, false);
    for (int a = 0; a < n; a++) {
        if (g.degree(a) == 2) continue;
        uint64_t nb = g.row(a);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (g.degree(w) != 2 || in_chain[w]) continue;
            Chain c;
            c.a = a;
            int prev = a, cur = w;
            while (g.degree(cur) == 2) {
                in_chain[cur] = true;
                c.interior.push_back(cur);
                uint64_t nx = g.row(cur) & ~bit(prev);
                prev = cur;
                cur = std::countr_zero(nx);
            }
            c.b = cur;
            if (c.a == c.b) return std::nullopt;  // pendant cycle through one branch vertex
            chains.push_back(c);
        }
    }

    // two chains joining the same branch pair force the cycle to be exactly
    // their union; three or more make the pair infeasible
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int i = 0; i < int(chains.size()); i++)
        by_pair[{std::min(chains[i].a, chains[i].b), std::max(chains[i].a, chains[i].b)}]
            .push_back(i);
    for (auto& [pr, idxs] : by_pair) {
        if (idxs.size() == 1) continue;
        if (idxs.size() > 2) return std::nullopt;
        const Chain &c1 = chains[idxs[0]], &c2 = chains[idxs[1]];
        if (2 + int(c1.interior.size() + c2.interior.size()) != n) return std::nullopt;
        std::vector<int> seq = {c1.a};
        seq.insert(seq.end(), c1.interior.begin(), c1.interior.end());
        seq.push_back(c1.b);
        std::vector<int> back = c2.interior;
        if (c2.a != c1.b) std::reverse(back.begin(), back.end());
        seq.insert(seq.end(), back.begin(), back.end());
        return Cycle::in(g, seq);
    }

    // contracted graph on branch vertices
    std::vector<int> new_id(n, -1), old_id;
    for (int v = 0; v < n; v++)
        if (g.degree(v) >= 3) {
            new_id[v] = int(old_id.size());
            old_id.push_back(v);
        }
    int m = int(old_id.size());
    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : g.edges())
        if (new_id[x] >= 0 && new_id[y] >= 0) edges.push_back({new_id[x], new_id[y]});
    std::vector<std::pair<int, int>> required;
    std::map<std::pair<int, int>, const Chain*> chain_at;
    for (const Chain& c : chains) {
        auto key = std::make_pair(std::min(new_id[c.a], new_id[c.b]),
                                  std::max(new_id[c.a], new_id[c.b]));
        // a direct branch-branch edge parallel to a forced chain is unusable
        std::erase(edges, key);
        required.push_back(key);
        chain_at[key] = &c;
    }
    for (auto [x, y] : required) edges.push_back({x, y});
    Graph h = Graph::from_edges(m, edges);
    auto hc = hamiltonian_cycle_required(h, required);
    if (!hc) return std::nullopt;

    std::vector<int> seq;
    for (int t = 0; t < hc->length(); t++) {
        int x = old_id[hc->at(t)];
        seq.push_back(x);
        auto it = chain_at.find({std::min(hc->at(t), hc->at(t + 1)),
                                 std::max(hc->at(t), hc->at(t + 1))});
        if (it != chain_at.end()) {
            std::vector<int> inner = it->second->interior;
            if (it->second->a != x) std::reverse(inner.begin(), inner.end());
            seq.insert(seq.end(), inner.begin(), inner.end());
        }
    }
    return Cycle::in(g, seq);
}

namespace {

bool spanning_star_ok(const Graph& out, int x, GadgetVariant variant) {
    Graph nb = local_subgraph(out, x).graph;
    int t = nb.n();
    uint64_t all = VertexSet::range(t).bits;
    if (variant == GadgetVariant::g2) {
        for (int c = 0; c < t; c++)
            if (nb.row(c) == (all & ~bit(c))) return true;  // K_{1,7} center
        return false;
    }
    // K_{1,5} with one edge subdivided: center c adjacent to all but w,
    // and w reached through some middle vertex m
    for (int c = 0; c < t; c++)
        for (int w = 0; w < t; w++) {
            if (w == c) continue;
            if ((nb.row(c) | bit(c) | bit(w)) != all) continue;
            if (nb.row(w) & ~bit(c)) return true;
        }
    return false;
}

}  // namespace

ReductionCheck verify_reduction_instance(const ReducedInstance& inst) {
    ReductionCheck chk;
    const Graph& out = inst.output;
    int want_delta = inst.variant == GadgetVariant::g1 ? 7 : 8;
    chk.degree_ok = degree_profile(out).max_degree == want_delta;
    for (int id = 0; id < out.n() && chk.degree_ok; id++)
        if (inst.label_of[id].layer == 3 && out.degree(id) != 2) chk.degree_ok = false;

    LocalProfile lp = local_profile(out);
    chk.local_bound_ok = inst.variant == GadgetVariant::g1 ? (lp.min_k && *lp.min_k <= 3)
                                                           : (lp.min_k && *lp.min_k == 2);
    chk.star_ok = true;
    for (int id = 0; id < out.n() && chk.star_ok; id++)
        if (inst.label_of[id].layer != 3 && !spanning_star_ok(out, id, inst.variant))
            chk.star_ok = false;

    if (out.n() <= 48) {
        auto src_cycle = hamiltonian_cycle_with_contraction(inst.source);
        auto red_cycle = hamiltonian_cycle_with_contraction(out);
        chk.ham_source = src_cycle.has_value();
        chk.ham_reduced = red_cycle.has_value();
        bool equiv = *chk.ham_source == *chk.ham_reduced;
        // round-trip the witnesses through the gadgets; both constructions validate
        try {
            if (src_cycle) lift_cycle(inst, *src_cycle);
            if (red_cycle) project_cycle(inst, *red_cycle);
        } catch (const GraphError&) {
            equiv = false;
        }
        chk.equivalence_ok = equiv;
    }
    return chk;
}

}  // namespace locis
