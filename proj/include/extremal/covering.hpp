#pragma once

#include <vector>

#include "extremal/counting.hpp"
#include "extremal/graph.hpp"

namespace extremal {

// Exact optimum for the smallest vertex set meeting every triangle, with a
// matching pair of witnesses.
struct CoverCertificate {
  int tau = 0;
  VertexSet cover = 0;              // optimal cover, |cover| == tau
  std::vector<Triangle> packing;    // vertex-disjoint triangles, |packing| <= tau
};

// True iff removing s leaves the graph triangle-free.
bool is_triangle_cover(const Graph& g, VertexSet s);

// Maximal vertex-disjoint triangle packing, scanning triangles in
// lexicographic order. Lower-bound witness only; not an optimal packing.
std::vector<Triangle> greedy_triangle_packing(const Graph& g);

// Branch and bound: always branches on the three vertices of the
// lexicographically least uncovered triangle, pruning with the greedy
// packing bound, so certificates are deterministic.
CoverCertificate tau_triangle(const Graph& g);

// Independent oracle: cardinality-ascending scan over all vertex subsets.
int tau_triangle_oracle(const Graph& g);

// Decide tau >= s without computing the optimum (depth-limited search for a
// cover smaller than s).
bool tau_at_least(const Graph& g, int s);

// Re-validates a certificate against the graph from first principles.
bool certificate_valid(const Graph& g, const CoverCertificate& cert);

}  // namespace extremal
