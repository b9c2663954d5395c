#pragma once

#include <compare>
#include <map>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

struct Triangle {
  int a = 0, b = 0, c = 0;  // a < b < c
  auto operator<=>(const Triangle&) const = default;
};

// Exact triangle count: one bit-row intersection per edge, each triangle
// counted at its lowest edge.
long long count_triangles(const Graph& g);

// Independent oracle: plain triple loop over vertex triples.
long long count_triangles_oracle(const Graph& g);

// Early-exit variant for triangle-freeness tests.
bool has_triangle(const Graph& g);

// All triangles in lexicographic (a, b, c) order.
std::vector<Triangle> list_triangles(const Graph& g);

struct TriangleProfile {
  long long total = 0;
  std::vector<long long> per_vertex;                 // triangles through v
  std::map<std::pair<int, int>, long long> per_edge;  // |N(u) ∩ N(v)| per edge
};

TriangleProfile triangle_profile(const Graph& g);

// Number of k-vertex subsets inducing a complete subgraph, by recursive
// extension over candidate bit rows in ascending vertex order.
long long count_cliques(const Graph& g, int k);

// All k-cliques in ascending-lexicographic order of their vertex lists.
std::vector<VertexSet> list_cliques(const Graph& g, int k);

struct CliqueSummary {
  long long count = 0;
  VertexSet common = 0;  // intersection of all copies; only meaningful when count > 0
};

// Count plus the common vertex intersection of every k-clique, in one pass.
CliqueSummary summarize_cliques(const Graph& g, int k);

}  // namespace extremal
