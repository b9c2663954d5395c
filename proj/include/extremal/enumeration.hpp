#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "extremal/counting.hpp"
#include "extremal/covering.hpp"
#include "extremal/graph.hpp"

namespace extremal {

// Exact binomial coefficient; the caller keeps arguments small enough for
// the result to fit (enumeration spaces here stay far below 2^63).
unsigned long long binomial(long long n, long long k);

// One slice of the labeled (n, m) search space. Edge slots are the pairs
// (0,1), (0,2), (1,2), (0,3), ... in column-major order; combinations of m
// slots are visited colexicographically. Combinations sharing their leading
// (largest) slot form contiguous blocks in that order; blocks go to shards
// round-robin, so shards partition the space deterministically.
struct EnumerationTask {
  int n = 0;
  long long m = 0;
  int shard_count = 1;
  int shard_id = 0;
  // Filters, applied cheap-first: triangle bounds before tau bounds.
  std::optional<long long> min_triangles;
  std::optional<long long> max_triangles;
  std::optional<int> min_tau;
  std::optional<int> max_tau;
};

struct EnumerationStats {
  std::uint64_t visited = 0;  // graphs built in this shard
  std::uint64_t passed = 0;   // graphs that survived the filters
};

namespace detail {

inline std::vector<std::pair<int, int>> edge_slot_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

}  // namespace detail

// Visits every m-subset of the edge slots exactly once (within the given
// shard), building each labeled graph and passing it to the visitor after
// the filters. Returns per-shard statistics.
template <class Visitor>
EnumerationStats enumerate_labeled(const EnumerationTask& task, Visitor&& visit) {
  const int n = task.n;
  if (n < 0 || n > Graph::kMaxVertices) throw std::out_of_range("enumerate_labeled: bad vertex count");
  const long long slots = static_cast<long long>(n) * (n - 1) / 2;
  const long long m = task.m;
  if (m < 0 || m > slots) throw std::out_of_range("enumerate_labeled: edge count out of range");
  if (task.shard_count < 1 || task.shard_id < 0 || task.shard_id >= task.shard_count)
    throw std::out_of_range("enumerate_labeled: bad shard");

  const auto pairs = detail::edge_slot_pairs(n);
  EnumerationStats stats;
  Graph g(n);

  const auto emit = [&](const std::vector<int>& combo) {
    g.clear_edges();
    for (int slot : combo) g.add_edge_unchecked(pairs[static_cast<std::size_t>(slot)].first,
                                                pairs[static_cast<std::size_t>(slot)].second);
    ++stats.visited;
    if (task.min_triangles || task.max_triangles) {
      const long long t = count_triangles(g);
      if (task.min_triangles && t < *task.min_triangles) return;
      if (task.max_triangles && t > *task.max_triangles) return;
    }
    if (task.min_tau || task.max_tau) {
      const int tau = tau_triangle(g).tau;
      if (task.min_tau && tau < *task.min_tau) return;
      if (task.max_tau && tau > *task.max_tau) return;
    }
    ++stats.passed;
    visit(static_cast<const Graph&>(g));
  };

  if (m == 0) {
    if (task.shard_id == 0) emit({});
    return stats;
  }

  std::vector<int> combo(static_cast<std::size_t>(m));
  for (long long lead = m - 1; lead < slots; ++lead) {
    const long long block = lead - (m - 1);
    if (block % task.shard_count != task.shard_id) continue;
    // Colex over the m-1 lower slots, with combo.back() pinned to `lead`.
    for (long long i = 0; i < m; ++i) combo[static_cast<std::size_t>(i)] = static_cast<int>(i);
    combo[static_cast<std::size_t>(m - 1)] = static_cast<int>(lead);
    while (true) {
      emit(combo);
      long long i = 0;
      while (i < m - 1) {
        const int limit = (i + 1 < m - 1) ? combo[static_cast<std::size_t>(i + 1)]
                                          : static_cast<int>(lead);
        if (combo[static_cast<std::size_t>(i)] + 1 < limit) break;
        ++i;
      }
      if (i == m - 1) break;
      ++combo[static_cast<std::size_t>(i)];
      for (long long j = 0; j < i; ++j) combo[static_cast<std::size_t>(j)] = static_cast<int>(j);
    }
  }
  return stats;
}

struct IsoClass {
  Graph representative;  // graph6-least member seen
  std::size_t size = 0;  // number of pool members in the class
};

// Groups a pool of graphs into isomorphism classes using fingerprint
// bucketing plus pairwise backtracking tests. Representatives are the
// graph6-least members, returned in ascending graph6 order.
std::vector<IsoClass> isomorphism_classes(const std::vector<Graph>& pool);

// Just the representatives.
std::vector<Graph> reduce_to_isomorphism_classes(const std::vector<Graph>& pool);

}  // namespace extremal
