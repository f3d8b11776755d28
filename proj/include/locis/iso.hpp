#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "locis/graph.hpp"

namespace locis {

// Canonical-form certificate: byte 0 is the order, then the upper-triangle
// bit string of the canonical adjacency matrix in row-major pair order
// (0,1),(0,2),...,(1,2),..., MSB first, zero-padded to a byte boundary.
// Certificates of two graphs are equal iff the graphs are isomorphic.
struct Certificate {
    std::string bytes;

    std::string hex() const;
    auto operator<=>(const Certificate&) const = default;
};

// Canonical labeling by equitable refinement plus individualization search.
// Supported for n <= 12.
Certificate canonical_certificate(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);  // n <= 12

// Hot path for the enumeration scan (n <= 8): the canonical upper-triangle
// bits packed above the order byte. Equal keys iff isomorphic.
uint64_t canonical_key8(int n, const uint8_t rows[8]);

}  // namespace locis
