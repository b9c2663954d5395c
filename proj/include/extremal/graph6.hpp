#pragma once

#include <string>
#include <string_view>

#include "extremal/graph.hpp"

namespace extremal {

// graph6 text encoding (short form, n <= 62): byte 0 is n+63, followed by
// the upper-triangle adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... in
// column-major order, packed big-endian six bits per byte, each byte +63.
std::string to_graph6(const Graph& g);

// Strict decoder: rejects bad lengths, bytes outside [63, 126] and nonzero
// padding bits, so encode/decode round-trips bit-exactly.
Graph from_graph6(std::string_view text);

}  // namespace extremal
