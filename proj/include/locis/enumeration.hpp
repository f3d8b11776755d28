#pragma once

#include <optional>
#include <vector>

#include "locis/graph.hpp"

namespace locis {

// All connected graphs on n vertices up to isomorphism, one representative
// per class, in deterministic order (ascending lexicographic edge mask of
// the smallest labeled representative). Supported for 1 <= n <= 8.
//
// The scan walks every edge subset of the n-clique, filters disconnected
// ones, buckets by degree sequence and dedups by canonical certificate.
// threads <= 1 runs one shard; otherwise shards are scanned independently
// (OpenMP) and merged, with output independent of the shard count.
std::vector<Graph> enumerate_connected(int n, int threads = 1);

// Straightforward single-threaded reference: lexicographic edge-subset loop
// over public Graph/certificate APIs. Kept as the comparison baseline for
// the optimized scan.
std::vector<Graph> enumerate_connected_reference(int n);

// Streaming view over enumerate_connected.
class GraphStream {
  public:
    explicit GraphStream(int n, int threads = 1);
    std::optional<Graph> next();
    int order() const { return n_; }

  private:
    int n_;
    size_t cursor_ = 0;
    std::vector<Graph> graphs_;
};

}  // namespace locis
