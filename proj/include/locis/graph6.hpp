#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "locis/graph.hpp"

namespace locis {

struct Graph6Error : GraphError {
    Graph6Error(const std::string& msg, size_t offset)
        : GraphError(msg + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
    size_t byte_offset;
};

// Standard graph6 line for n <= 62 (single-byte header only).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

// Reads every graph6 line from the stream; '>'-prefixed header lines and
// blank lines are skipped.
std::vector<Graph> graph6_read_stream(std::istream& in);

}  // namespace locis
