#include "locis/graph6.hpp"

namespace locis {

std::string graph6_encode(const Graph& g) {
    int n = g.n();
    if (n > 62) throw GraphError("graph6 encoding supports n <= 62 only");
    std::string out;
    out.push_back(char(n + 63));
    int acc = 0, nb = 0;
    for (int v = 1; v < n; v++)
        for (int u = 0; u < v; u++) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) out.push_back(char((acc << (6 - nb)) + 63));
    return out;
}

Graph graph6_decode(const std::string& line) {
    if (line.empty()) throw Graph6Error("empty graph6 line", 0);
    size_t pos = 0;
    int n = int(static_cast<unsigned char>(line[pos])) - 63;
    if (n < 0 || n > 62) throw Graph6Error("unsupported graph6 header byte", pos);
    pos++;
    int nbits = n * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (line.size() - pos != nbytes)
        throw Graph6Error("graph6 line has wrong length for order " + std::to_string(n),
                          line.size() < pos + nbytes ? line.size() : pos + nbytes);
    std::vector<uint64_t> rows(n, 0);
    int bit = 0;
    for (size_t i = 0; i < nbytes; i++) {
        int c = int(static_cast<unsigned char>(line[pos + i])) - 63;
        if (c < 0 || c > 63) throw Graph6Error("graph6 byte out of range", pos + i);
        for (int k = 5; k >= 0; k--, bit++) {
            if (bit >= nbits) {
                if ((c >> k) & 1) throw Graph6Error("nonzero padding bits", pos + i);
                continue;
            }
            if ((c >> k) & 1) {
                // bit index -> column-major upper-triangle pair (u, v), v = 1..n-1
                int v = 1, base = 0;
                while (base + v <= bit) base += v, v++;
                int u = bit - base;
                rows[u] |= uint64_t(1) << v;
                rows[v] |= uint64_t(1) << u;
            }
        }
    }
    return Graph::from_rows(n, rows);
}

std::vector<Graph> graph6_read_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

}  // namespace locis
