#pragma once

#include <random>

#include "extremal/graph.hpp"

namespace extremal::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// Graph with the same edges under a uniformly random vertex relabeling.
inline Graph shuffled(std::mt19937_64& rng, const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = v;
  std::shuffle(label.begin(), label.end(), rng);
  Graph out(n);
  for (const auto& [u, v] : g.edges())
    out.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
  return out;
}

// Graph from the edge-subset bitmask over the column-major edge slots; used
// to sweep every labeled graph at small n.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int slot = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++slot)
      if (mask & (std::uint64_t{1} << slot)) g.add_edge(i, j);
  return g;
}

}  // namespace extremal::testing
