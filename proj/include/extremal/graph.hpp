#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace extremal {

// A set of vertices as a bitmask; vertex v is bit v.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

// Mask with bits 0..n-1 set.
constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Mask with bits strictly above v set.
constexpr VertexSet above(int v) {
  return v >= 63 ? VertexSet{0} : ~VertexSet{0} << (v + 1);
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline VertexSet vertices_to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) {
    if (v < 0 || v >= 64) throw std::out_of_range("vertex index out of range");
    s |= vertex_bit(v);
  }
  return s;
}

// Simple undirected graph on at most 64 vertices, stored as one adjacency
// bit row per vertex. Rows with index >= vertex_count() stay zero, so
// whole-object equality is structural equality.
//
// Mutations keep the symmetry/no-loop invariants by construction; add/remove
// reject edges that are already present/absent so that edge counts stay
// exact under the arithmetic the callers rely on.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) {
    if (n < 0 || n > kMaxVertices) throw std::out_of_range("vertex count must be in [0, 64]");
    n_ = n;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return edges_; }
  VertexSet vertices() const { return full_set(n_); }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  // Unchecked row access for algorithm kernels.
  std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  bool has_edge(int u, int v) const {
    check_pair(u, v);
    return (adj_[static_cast<std::size_t>(u)] & vertex_bit(v)) != 0;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    if (adj_[static_cast<std::size_t>(u)] & vertex_bit(v))
      throw std::invalid_argument("add_edge: edge already present");
    add_edge_unchecked(u, v);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    if (!(adj_[static_cast<std::size_t>(u)] & vertex_bit(v)))
      throw std::invalid_argument("remove_edge: edge not present");
    adj_[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
    --edges_;
  }

  // Fast paths for bulk construction in enumeration loops; no validation.
  void add_edge_unchecked(int u, int v) {
    adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
    ++edges_;
  }

  void clear_edges() {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = 0;
    edges_ = 0;
  }

  // Subgraph induced by s, vertices relabeled 0..|s|-1 in ascending order.
  Graph induced_subgraph(VertexSet s) const;

  // Subgraph induced by the complement of s.
  Graph delete_vertices(VertexSet s) const {
    check_subset(s);
    return induced_subgraph(vertices() & ~s);
  }

  // Number of edges with one endpoint in a and the other in b; the sets
  // must be disjoint.
  long long edges_between(VertexSet a, VertexSet b) const;

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }
  void check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
  }
  void check_subset(VertexSet s) const {
    if (s & ~vertices()) throw std::out_of_range("vertex set has bits beyond the vertex count");
  }

  std::array<std::uint64_t, kMaxVertices> adj_{};
  int n_ = 0;
  int edges_ = 0;
};

// Edge-preserving bijection test by fingerprint pruning plus backtracking.
// Meant for small graphs (the pools it is used on have n <= 10).
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace extremal
