#include "locis/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "locis/iso.hpp"

namespace locis {

namespace {

struct PairTable {
    int pu[28], pv[28], npairs;
    explicit PairTable(int n) {
        npairs = 0;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++) pu[npairs] = u, pv[npairs] = v, npairs++;
    }
};

bool connected8(int n, const uint8_t rows[8]) {
    unsigned all = (1u << n) - 1;
    unsigned seen = 1, frontier = 1;
    while (frontier) {
        unsigned next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= rows[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

uint64_t degseq_key(int n, const uint8_t rows[8]) {
    int d[8];
    for (int v = 0; v < n; v++) d[v] = std::popcount(unsigned(rows[v]));
    std::sort(d, d + n);
    uint64_t key = 0;
    for (int v = 0; v < n; v++) key = (key << 4) | uint64_t(d[v]);
    return key;
}

// seen sets bucketed by degree sequence; per class keep the smallest
// labeled edge mask, which fixes the output order
using ShardMap = std::unordered_map<uint64_t, std::unordered_map<uint64_t, uint32_t>>;

void scan_range(int n, const PairTable& pt, uint64_t lo, uint64_t hi, ShardMap& out) {
    // gray-code walk so each step toggles a single edge
    uint8_t rows[8] = {0};
    uint64_t mask = lo ^ (lo >> 1);
    int ecount = 0;
    for (int b = 0; b < pt.npairs; b++)
        if ((mask >> b) & 1) {
            rows[pt.pu[b]] |= 1 << pt.pv[b];
            rows[pt.pv[b]] |= 1 << pt.pu[b];
            ecount++;
        }
    for (uint64_t i = lo; i < hi; i++) {
        if (ecount >= n - 1 && connected8(n, rows)) {
            uint64_t key = canonical_key8(n, rows);
            auto& slot = out[degseq_key(n, rows)][key];
            uint32_t m32 = uint32_t(mask);
            if (slot == 0 || m32 < slot) slot = m32;
        }
        // toggle the gray bit that turns g(i) into g(i+1)
        int b = std::countr_zero(i + 1);
        if (b < pt.npairs) {
            uint64_t eb = uint64_t(1) << b;
            mask ^= eb;
            rows[pt.pu[b]] ^= 1 << pt.pv[b];
            rows[pt.pv[b]] ^= 1 << pt.pu[b];
            ecount += (mask & eb) ? 1 : -1;
        }
    }
}

Graph graph_from_mask(int n, const PairTable& pt, uint64_t mask) {
    std::vector<uint64_t> rows(n, 0);
    for (int b = 0; b < pt.npairs; b++)
        if ((mask >> b) & 1) {
            rows[pt.pu[b]] |= uint64_t(1) << pt.pv[b];
            rows[pt.pv[b]] |= uint64_t(1) << pt.pu[b];
        }
    return Graph::from_rows(n, rows);
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, int threads) {
    if (n < 1 || n > 8)
        throw UnsupportedSize("enumerate_connected supports 1 <= n <= 8, got n = " +
                              std::to_string(n));
    PairTable pt(n);
    if (n == 1) return {Graph::empty_graph(1)};
    uint64_t total = uint64_t(1) << pt.npairs;
    int nshards = threads > 1 ? threads : 1;
    std::vector<ShardMap> shards(nshards);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nshards) schedule(static, 1)
#endif
    for (int s = 0; s < nshards; s++) {
        uint64_t lo = total * s / nshards, hi = total * (s + 1) / nshards;
        scan_range(n, pt, lo, hi, shards[s]);
    }
    // merge shards: per certificate keep the smallest labeled mask
    std::unordered_map<uint64_t, uint32_t> merged;
    for (const auto& shard : shards)
        for (const auto& [dk, bucket] : shard)
            for (const auto& [cert, mask] : bucket) {
                auto [it, fresh] = merged.try_emplace(cert, mask);
                if (!fresh && mask < it->second) it->second = mask;
            }
    std::vector<uint32_t> masks;
    masks.reserve(merged.size());
    for (const auto& [cert, mask] : merged) masks.push_back(mask);
    std::sort(masks.begin(), masks.end());
    std::vector<Graph> out;
    out.reserve(masks.size());
    for (uint32_t m : masks) out.push_back(graph_from_mask(n, pt, m));
    return out;
}

std::vector<Graph> enumerate_connected_reference(int n) {
    if (n < 1 || n > 8)
        throw UnsupportedSize("enumerate_connected_reference supports 1 <= n <= 8");
    PairTable pt(n);
    std::map<Certificate, uint64_t> seen;  // certificate -> first (smallest) mask
    uint64_t total = uint64_t(1) << pt.npairs;
    for (uint64_t mask = 0; mask < total; mask++) {
        Graph g = graph_from_mask(n, pt, mask);
        if (!is_connected(g)) continue;
        seen.try_emplace(canonical_certificate(g), mask);
    }
    std::vector<uint64_t> masks;
    for (const auto& [cert, mask] : seen) masks.push_back(mask);
    std::sort(masks.begin(), masks.end());
    std::vector<Graph> out;
    for (uint64_t m : masks) out.push_back(graph_from_mask(n, pt, m));
    return out;
}

GraphStream::GraphStream(int n, int threads) : n_(n), graphs_(enumerate_connected(n, threads)) {}

std::optional<Graph> GraphStream::next() {
    if (cursor_ >= graphs_.size()) return std::nullopt;
    return graphs_[cursor_++];
}

}  // namespace locis
