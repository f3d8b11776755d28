#include "locis/iso.hpp"

#include <algorithm>
#include <bit>

namespace locis {

namespace {

constexpr int kCanonMax = 12;

struct Canon {
    int n;
    uint16_t rows[kCanonMax];
    int nbits;
    unsigned __int128 best;
    bool have_best;

    // color[v] is the ordered-cell index of v; cells are numbered 0..ncolors-1
    // in canonical order.
    struct Coloring {
        uint8_t color[kCanonMax];
        int ncolors;
    };

    // Equitable refinement. Cell order is inherited from the incoming colors
    // (kept in the high bits of the sort signature) and ties broken by the
    // multiset of neighbor colors, so the refined order is relabeling-invariant.
    void refine(Coloring& c) const {
        for (;;) {
            uint64_t sig[kCanonMax];
            for (int v = 0; v < n; v++) {
                uint64_t lo = 0;
                uint16_t nb = rows[v];
                while (nb) {
                    int w = std::countr_zero(nb);
                    nb &= nb - 1;
                    lo += uint64_t(1) << (4 * c.color[w]);
                }
                sig[v] = (uint64_t(c.color[v]) << 48) | lo;
            }
            int order[kCanonMax];
            for (int v = 0; v < n; v++) order[v] = v;
            std::sort(order, order + n, [&](int a, int b) { return sig[a] < sig[b]; });
            Coloring next;
            int nc = -1;
            uint64_t prev = ~uint64_t(0);
            for (int i = 0; i < n; i++) {
                if (sig[order[i]] != prev) nc++, prev = sig[order[i]];
                next.color[order[i]] = uint8_t(nc);
            }
            next.ncolors = nc + 1;
            bool stable = next.ncolors == c.ncolors;
            c = next;
            if (stable) return;
        }
    }

    void leaf(const Coloring& c) {
        int at[kCanonMax];  // canonical position -> vertex
        for (int v = 0; v < n; v++) at[c.color[v]] = v;
        unsigned __int128 key = 0;
        int bitpos = nbits;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++) {
                bitpos--;
                if ((rows[at[i]] >> at[j]) & 1) key |= (unsigned __int128)1 << bitpos;
            }
        if (!have_best || key < best) best = key, have_best = true;
    }

    void search(Coloring c) {
        refine(c);
        if (c.ncolors == n) {
            leaf(c);
            return;
        }
        int target = -1;
        int members[kCanonMax], nm = 0;
        for (int col = 0; col < c.ncolors && target < 0; col++) {
            nm = 0;
            for (int v = 0; v < n; v++)
                if (c.color[v] == col) members[nm++] = v;
            if (nm > 1) target = col;
        }
        int tried[kCanonMax], nt = 0;
        for (int k = 0; k < nm; k++) {
            int u = members[k];
            // Swapping u with an already-tried cellmate is an automorphism when
            // their neighborhoods agree off {u, w}; that branch would repeat.
            bool dup = false;
            for (int t = 0; t < nt && !dup; t++) {
                int w = tried[t];
                uint16_t off = uint16_t(~((1u << u) | (1u << w)));
                dup = (rows[u] & off) == (rows[w] & off);
            }
            if (dup) continue;
            tried[nt++] = u;
            // u becomes a singleton cell just before the rest of its cell;
            // colors are renumbered to stay contiguous for refine().
            Coloring child;
            uint8_t tmp[kCanonMax];
            for (int v = 0; v < n; v++) tmp[v] = uint8_t(2 * c.color[v]);
            for (int j = 0; j < nm; j++)
                if (members[j] != u) tmp[members[j]]++;
            int remap[2 * kCanonMax];
            std::fill(remap, remap + 2 * kCanonMax, -1);
            for (int v = 0; v < n; v++) remap[tmp[v]] = 0;
            int rc = 0;
            for (int val = 0; val < 2 * kCanonMax; val++)
                if (remap[val] == 0) remap[val] = rc++;
            for (int v = 0; v < n; v++) child.color[v] = uint8_t(remap[tmp[v]]);
            child.ncolors = rc;
            search(child);
        }
    }
};

unsigned __int128 canon_bits(int n, const uint16_t* rows) {
    Canon cn;
    cn.n = n;
    for (int v = 0; v < n; v++) cn.rows[v] = rows[v];
    cn.nbits = n * (n - 1) / 2;
    cn.have_best = false;
    cn.best = 0;
    if (n == 0) return 0;
    Canon::Coloring start;
    // initial cells by degree, ascending
    int deg[kCanonMax], order[kCanonMax];
    for (int v = 0; v < n; v++) deg[v] = std::popcount(unsigned(rows[v])), order[v] = v;
    std::sort(order, order + n, [&](int a, int b) { return deg[a] < deg[b]; });
    int nc = -1, prev = -1;
    for (int i = 0; i < n; i++) {
        if (deg[order[i]] != prev) nc++, prev = deg[order[i]];
        start.color[order[i]] = uint8_t(nc);
    }
    start.ncolors = nc + 1;
    cn.search(start);
    return cn.best;
}

Certificate bits_to_certificate(int n, unsigned __int128 key) {
    int nbits = n * (n - 1) / 2;
    Certificate cert;
    cert.bytes.push_back(char(n));
    int acc = 0, nb = 0;
    for (int t = 0; t < nbits; t++) {
        int bit = int((key >> (nbits - 1 - t)) & 1);
        acc = (acc << 1) | bit;
        if (++nb == 8) {
            cert.bytes.push_back(char(acc));
            acc = 0;
            nb = 0;
        }
    }
    if (nb) cert.bytes.push_back(char(acc << (8 - nb)));
    return cert;
}

}  // namespace

std::string Certificate::hex() const {
    static const char* d = "0123456789abcdef";
    std::string out;
    for (unsigned char b : bytes) {
        out.push_back(d[b >> 4]);
        out.push_back(d[b & 15]);
    }
    return out;
}

Certificate canonical_certificate(const Graph& g) {
    if (g.n() > kCanonMax)
        throw UnsupportedSize("canonical certificates support n <= 12, got n = " +
                              std::to_string(g.n()));
    uint16_t rows[kCanonMax];
    for (int v = 0; v < g.n(); v++) rows[v] = uint16_t(g.row(v));
    return bits_to_certificate(g.n(), canon_bits(g.n(), rows));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    auto dg = degree_profile(g), dh = degree_profile(h);
    if (dg.sorted_degrees != dh.sorted_degrees) return false;
    return canonical_certificate(g) == canonical_certificate(h);
}

uint64_t canonical_key8(int n, const uint8_t rows[8]) {
    uint16_t r16[kCanonMax];
    for (int v = 0; v < n; v++) r16[v] = rows[v];
    return (uint64_t(canon_bits(n, r16)) << 8) | uint64_t(n);
}

}  // namespace locis
