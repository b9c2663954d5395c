#include "extremal/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "extremal/graph6.hpp"

namespace extremal {

unsigned long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (long long i = 1; i <= k; ++i) {
    unsigned long long mul = static_cast<unsigned long long>(n - k + i);
    unsigned long long div = static_cast<unsigned long long>(i);
    unsigned long long g = std::gcd(result, div);
    result /= g;
    div /= g;
    mul /= std::gcd(mul, div);  // div is now 1: C(n-k+i, i) is integral
    result *= mul;
  }
  return result;
}

namespace {

using Key = std::tuple<int, int, std::vector<int>, std::vector<long long>>;

Key fingerprint_key(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> degrees(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) degrees[static_cast<std::size_t>(v)] = g.degree(v);
  TriangleProfile p = triangle_profile(g);
  std::sort(degrees.begin(), degrees.end());
  std::sort(p.per_vertex.begin(), p.per_vertex.end());
  return {n, g.edge_count(), std::move(degrees), std::move(p.per_vertex)};
}

}  // namespace

std::vector<IsoClass> isomorphism_classes(const std::vector<Graph>& pool) {
  std::map<Key, std::vector<std::size_t>> buckets;
  std::vector<IsoClass> classes;
  std::vector<std::string> rep_g6;
  for (const Graph& g : pool) {
    auto& candidates = buckets[fingerprint_key(g)];
    bool placed = false;
    for (std::size_t idx : candidates) {
      if (are_isomorphic(classes[idx].representative, g)) {
        ++classes[idx].size;
        std::string g6 = to_graph6(g);
        if (g6 < rep_g6[idx]) {
          classes[idx].representative = g;
          rep_g6[idx] = std::move(g6);
        }
        placed = true;
        break;
      }
    }
    if (!placed) {
      candidates.push_back(classes.size());
      classes.push_back({g, 1});
      rep_g6.push_back(to_graph6(g));
    }
  }
  std::vector<std::size_t> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rep_g6[a] < rep_g6[b]; });
  std::vector<IsoClass> sorted;
  sorted.reserve(classes.size());
  for (std::size_t i : order) sorted.push_back(std::move(classes[i]));
  return sorted;
}

std::vector<Graph> reduce_to_isomorphism_classes(const std::vector<Graph>& pool) {
  std::vector<Graph> out;
  for (IsoClass& c : isomorphism_classes(pool)) out.push_back(std::move(c.representative));
  return out;
}

}  // namespace extremal
