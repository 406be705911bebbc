#pragma once

#include <string>
#include <string_view>

#include "shedlab/graph.hpp"

namespace shedlab {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte,
// each byte offset by 63. N(n) is one byte n+63 for n <= 62; 63 and 64 use
// the four-byte form 126, then n in three six-bit bytes.
std::string to_graph6(const Graph& g);

// Accepts one line; a trailing newline or carriage return is ignored, as is
// a leading ">>graph6<<" header.
Graph parse_graph6(std::string_view text);

} // namespace shedlab
