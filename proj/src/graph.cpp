#include "extremal/graph.hpp"

#include <algorithm>

namespace extremal {

Graph Graph::induced_subgraph(VertexSet s) const {
  check_subset(s);
  const std::vector<int> keep = set_to_vertices(s);
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const std::uint64_t r = adj_[static_cast<std::size_t>(keep[i])];
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (r & vertex_bit(keep[j])) out.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

long long Graph::edges_between(VertexSet a, VertexSet b) const {
  check_subset(a);
  check_subset(b);
  if (a & b) throw std::invalid_argument("edges_between: sets must be disjoint");
  long long total = 0;
  VertexSet s = a;
  while (s) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    total += std::popcount(adj_[static_cast<std::size_t>(v)] & b);
  }
  return total;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t r = adj_[static_cast<std::size_t>(u)] & above(u);
    while (r) {
      out.emplace_back(u, std::countr_zero(r));
      r &= r - 1;
    }
  }
  return out;
}

namespace {

// Per-vertex invariant used to prune candidate assignments: (degree,
// number of triangles through the vertex).
struct Fingerprint {
  int degree = 0;
  long long triangles = 0;
  auto operator<=>(const Fingerprint&) const = default;
};

std::vector<Fingerprint> fingerprints(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Fingerprint> fp(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) fp[static_cast<std::size_t>(v)].degree = g.degree(v);
  for (int u = 0; u < n; ++u) {
    std::uint64_t r = g.row(u) & above(u);
    while (r) {
      const int v = std::countr_zero(r);
      r &= r - 1;
      const std::uint64_t common = g.row(u) & g.row(v) & above(v);
      const int c = std::popcount(common);
      fp[static_cast<std::size_t>(u)].triangles += c;
      fp[static_cast<std::size_t>(v)].triangles += c;
      std::uint64_t w = common;
      while (w) {
        fp[static_cast<std::size_t>(std::countr_zero(w))].triangles += 1;
        w &= w - 1;
      }
    }
  }
  return fp;
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  const std::vector<Fingerprint>& gfp;
  const std::vector<Fingerprint>& hfp;
  std::vector<int> order;      // g vertices, most-constrained first
  std::vector<int> image;      // g vertex -> h vertex
  VertexSet mapped_g = 0;
  VertexSet used_h = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int gv = order[depth];
    // Image of N(gv) among already-mapped vertices; a candidate must have
    // exactly this set as its neighborhood within the mapped image.
    std::uint64_t want = 0;
    std::uint64_t r = g.row(gv) & mapped_g;
    while (r) {
      want |= vertex_bit(image[static_cast<std::size_t>(std::countr_zero(r))]);
      r &= r - 1;
    }
    for (int hv = 0; hv < h.vertex_count(); ++hv) {
      if (used_h & vertex_bit(hv)) continue;
      if (hfp[static_cast<std::size_t>(hv)] != gfp[static_cast<std::size_t>(gv)]) continue;
      if ((h.row(hv) & used_h) != want) continue;
      image[static_cast<std::size_t>(gv)] = hv;
      mapped_g |= vertex_bit(gv);
      used_h |= vertex_bit(hv);
      if (extend(depth + 1)) return true;
      mapped_g &= ~vertex_bit(gv);
      used_h &= ~vertex_bit(hv);
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (n == 0) return true;

  const auto gfp = fingerprints(g);
  const auto hfp = fingerprints(h);
  auto gs = gfp;
  auto hs = hfp;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return false;

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return gfp[static_cast<std::size_t>(a)] > gfp[static_cast<std::size_t>(b)];
  });

  IsoSearch search{g, h, gfp, hfp, std::move(order),
                   std::vector<int>(static_cast<std::size_t>(n), -1)};
  return search.extend(0);
}

}  // namespace extremal
