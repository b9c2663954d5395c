#include "extremal/covering.hpp"

#include <algorithm>

namespace extremal {

namespace {

// Lexicographically least triangle avoiding `removed`; returns false if the
// remaining graph is triangle-free.
bool least_uncovered_triangle(const Graph& g, VertexSet removed, Triangle& out) {
  const VertexSet avail = g.vertices() & ~removed;
  std::uint64_t as = avail;
  while (as) {
    const int a = std::countr_zero(as);
    as &= as - 1;
    std::uint64_t bs = g.row(a) & avail & above(a);
    while (bs) {
      const int b = std::countr_zero(bs);
      bs &= bs - 1;
      const std::uint64_t cs = g.row(a) & g.row(b) & avail & above(b);
      if (cs) {
        out = {a, b, std::countr_zero(cs)};
        return true;
      }
    }
  }
  return false;
}

int packing_bound(const Graph& g, VertexSet removed) {
  VertexSet used = removed;
  int count = 0;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    if (used & vertex_bit(a)) continue;
    std::uint64_t bs = g.row(a) & ~used & above(a);
    while (bs) {
      const int b = std::countr_zero(bs);
      bs &= bs - 1;
      const std::uint64_t cs = g.row(a) & g.row(b) & ~used & above(b);
      if (cs) {
        used |= vertex_bit(a) | vertex_bit(b) | (cs & -cs);
        ++count;
        break;  // a is consumed, move on
      }
    }
  }
  return count;
}

struct TauSearch {
  const Graph& g;
  int best;
  VertexSet best_cover;

  void descend(VertexSet removed, int depth) {
    Triangle t;
    if (!least_uncovered_triangle(g, removed, t)) {
      if (depth < best) {
        best = depth;
        best_cover = removed;
      }
      return;
    }
    if (depth + std::max(1, packing_bound(g, removed)) >= best) return;
    descend(removed | vertex_bit(t.a), depth + 1);
    descend(removed | vertex_bit(t.b), depth + 1);
    descend(removed | vertex_bit(t.c), depth + 1);
  }
};

// Is there a triangle cover of size <= budget (beyond `removed`)?
bool cover_within(const Graph& g, VertexSet removed, int budget) {
  Triangle t;
  if (!least_uncovered_triangle(g, removed, t)) return true;
  if (budget <= 0) return false;
  if (packing_bound(g, removed) > budget) return false;
  return cover_within(g, removed | vertex_bit(t.a), budget - 1) ||
         cover_within(g, removed | vertex_bit(t.b), budget - 1) ||
         cover_within(g, removed | vertex_bit(t.c), budget - 1);
}

}  // namespace

bool is_triangle_cover(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw std::out_of_range("vertex set has bits beyond the vertex count");
  Triangle t;
  return !least_uncovered_triangle(g, s, t);
}

std::vector<Triangle> greedy_triangle_packing(const Graph& g) {
  std::vector<Triangle> out;
  VertexSet used = 0;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    if (used & vertex_bit(a)) continue;
    std::uint64_t bs = g.row(a) & ~used & above(a);
    while (bs) {
      const int b = std::countr_zero(bs);
      bs &= bs - 1;
      const std::uint64_t cs = g.row(a) & g.row(b) & ~used & above(b);
      if (cs) {
        const int c = std::countr_zero(cs);
        out.push_back({a, b, c});
        used |= vertex_bit(a) | vertex_bit(b) | vertex_bit(c);
        break;
      }
    }
  }
  return out;
}

CoverCertificate tau_triangle(const Graph& g) {
  const int n = g.vertex_count();
  CoverCertificate cert;
  cert.packing = greedy_triangle_packing(g);

  // Any n-2 vertices cover everything, which seeds the incumbent.
  TauSearch search{g, std::max(0, n - 2) + 1, 0};
  search.descend(0, 0);
  cert.tau = search.best;
  cert.cover = search.best_cover;
  return cert;
}

int tau_triangle_oracle(const Graph& g) {
  const int n = g.vertex_count();
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      if (is_triangle_cover(g, 0)) return 0;
      continue;
    }
    // Gosper's hack over k-subsets of the n-bit universe.
    std::uint64_t s = full_set(k);
    const std::uint64_t limit = full_set(n);
    const std::uint64_t high = limit & ~full_set(n - k);  // highest k-subset
    while (true) {
      if (is_triangle_cover(g, s)) return k;
      if (s == high) break;
      const std::uint64_t c = s & -s;
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
      if (s & ~limit) break;
    }
  }
  return std::max(0, n - 2);
}

bool tau_at_least(const Graph& g, int s) {
  if (s <= 0) return true;
  return !cover_within(g, 0, s - 1);
}

bool certificate_valid(const Graph& g, const CoverCertificate& cert) {
  if (cert.tau != set_size(cert.cover)) return false;
  if (cert.cover & ~g.vertices()) return false;
  if (!is_triangle_cover(g, cert.cover)) return false;
  if (static_cast<int>(cert.packing.size()) > cert.tau) return false;
  VertexSet used = 0;
  for (const Triangle& t : cert.packing) {
    if (!(t.a < t.b && t.b < t.c)) return false;
    const VertexSet verts = vertex_bit(t.a) | vertex_bit(t.b) | vertex_bit(t.c);
    if (verts & used) return false;
    used |= verts;
    if (!(g.row(t.a) & vertex_bit(t.b)) || !(g.row(t.a) & vertex_bit(t.c)) ||
        !(g.row(t.b) & vertex_bit(t.c)))
      return false;
  }
  return true;
}

}  // namespace extremal
