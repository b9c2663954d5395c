#include "extremal/counting.hpp"

#include <stdexcept>

namespace extremal {

long long count_triangles(const Graph& g) {
  long long total = 0;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    std::uint64_t r = g.row(u) & above(u);
    while (r) {
      const int v = std::countr_zero(r);
      r &= r - 1;
      total += std::popcount(g.row(u) & g.row(v) & above(v));
    }
  }
  return total;
}

long long count_triangles_oracle(const Graph& g) {
  const int n = g.vertex_count();
  long long total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(g.row(i) & vertex_bit(j))) continue;
      for (int k = j + 1; k < n; ++k)
        if ((g.row(i) & vertex_bit(k)) && (g.row(j) & vertex_bit(k))) ++total;
    }
  return total;
}

bool has_triangle(const Graph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    std::uint64_t r = g.row(u) & above(u);
    while (r) {
      const int v = std::countr_zero(r);
      r &= r - 1;
      if (g.row(u) & g.row(v) & above(v)) return true;
    }
  }
  return false;
}

std::vector<Triangle> list_triangles(const Graph& g) {
  std::vector<Triangle> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    std::uint64_t r = g.row(a) & above(a);
    while (r) {
      const int b = std::countr_zero(r);
      r &= r - 1;
      std::uint64_t common = g.row(a) & g.row(b) & above(b);
      while (common) {
        out.push_back({a, b, std::countr_zero(common)});
        common &= common - 1;
      }
    }
  }
  return out;
}

TriangleProfile triangle_profile(const Graph& g) {
  TriangleProfile p;
  const int n = g.vertex_count();
  p.per_vertex.assign(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    std::uint64_t r = g.row(u) & above(u);
    while (r) {
      const int v = std::countr_zero(r);
      r &= r - 1;
      const std::uint64_t common = g.row(u) & g.row(v);
      p.per_edge[{u, v}] = std::popcount(common);
      std::uint64_t w = common & above(v);
      while (w) {
        const int x = std::countr_zero(w);
        w &= w - 1;
        ++p.total;
        ++p.per_vertex[static_cast<std::size_t>(u)];
        ++p.per_vertex[static_cast<std::size_t>(v)];
        ++p.per_vertex[static_cast<std::size_t>(x)];
      }
    }
  }
  return p;
}

namespace {

long long count_extensions(const Graph& g, VertexSet candidates, int remaining) {
  if (remaining == 0) return 1;
  if (std::popcount(candidates) < remaining) return 0;
  long long total = 0;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    total += count_extensions(g, candidates & g.row(v), remaining - 1);
  }
  return total;
}

void list_extensions(const Graph& g, VertexSet current, VertexSet candidates, int remaining,
                     std::vector<VertexSet>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (std::popcount(candidates) < remaining) return;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    list_extensions(g, current | vertex_bit(v), candidates & g.row(v), remaining - 1, out);
  }
}

void summarize_extensions(const Graph& g, VertexSet current, VertexSet candidates, int remaining,
                          CliqueSummary& s) {
  if (remaining == 0) {
    ++s.count;
    s.common &= current;
    return;
  }
  if (std::popcount(candidates) < remaining) return;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    summarize_extensions(g, current | vertex_bit(v), candidates & g.row(v), remaining - 1, s);
  }
}

}  // namespace

long long count_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("count_cliques: k must be at least 1");
  return count_extensions(g, g.vertices(), k);
}

std::vector<VertexSet> list_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("list_cliques: k must be at least 1");
  std::vector<VertexSet> out;
  list_extensions(g, 0, g.vertices(), k, out);
  return out;
}

CliqueSummary summarize_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("summarize_cliques: k must be at least 1");
  CliqueSummary s;
  s.common = g.vertices();
  summarize_extensions(g, 0, g.vertices(), k, s);
  return s;
}

}  // namespace extremal
