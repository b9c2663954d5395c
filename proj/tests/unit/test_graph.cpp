#include <doctest.h>

#include <random>

#include "extremal/counting.hpp"
#include "extremal/families.hpp"
#include "extremal/graph.hpp"
#include "test_util.hpp"

using namespace extremal;
using namespace extremal::testing;

TEST_CASE("empty graphs") {
  CHECK(Graph(0).vertex_count() == 0);
  CHECK(Graph(0).edge_count() == 0);
  const Graph g(5);
  CHECK(g.edge_count() == 0);
  for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 0);
  CHECK(Graph(64).vertex_count() == 64);
  CHECK_THROWS_AS(Graph(65), std::out_of_range);
  CHECK_THROWS_AS(Graph(-1), std::out_of_range);
}

TEST_CASE("edge mutation and symmetry") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(0, 1));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.remove_edge(1, 2), std::invalid_argument);
  g.remove_edge(1, 0);
  CHECK(g.edge_count() == 0);

  Graph k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
}

TEST_CASE("mutation sequences keep the invariants") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Graph g(n);
    for (int step = 0; step < 40; ++step) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (u == v) continue;
      if (g.has_edge(u, v))
        g.remove_edge(u, v);
      else
        g.add_edge(u, v);
      // symmetry, loop-freeness, degree consistency
      long long degree_sum = 0;
      for (int a = 0; a < n; ++a) {
        CHECK((g.row(a) & vertex_bit(a)) == 0);
        degree_sum += g.degree(a);
        for (int b = a + 1; b < n; ++b)
          CHECK(((g.row(a) >> b) & 1) == ((g.row(b) >> a) & 1));
      }
      CHECK(degree_sum == 2LL * g.edge_count());
    }
  }
}

TEST_CASE("induced subgraphs") {
  const Graph k5 = complete_graph(5);
  CHECK(k5.induced_subgraph(0) == Graph(0));
  CHECK(k5.induced_subgraph(0b00111) == complete_graph(3));
  CHECK(k5.induced_subgraph(k5.vertices()) == k5);
  CHECK_THROWS_AS(k5.induced_subgraph(vertex_bit(5)), std::out_of_range);

  // The class holding the extra edge of k_minus(3,3) induces one edge.
  const Graph km = k_minus(3, 3);
  const Graph inside = km.induced_subgraph(0b000111);
  CHECK(inside.vertex_count() == 3);
  CHECK(inside.edge_count() == 1);
  CHECK(inside.has_edge(0, 1));
}

TEST_CASE("delete_vertices") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.delete_vertices(vertex_bit(3)) == complete_graph(3));
  CHECK(k4.delete_vertices(0) == k4);
  // k_minus(3,3) minus both endpoints of its extra edge is a star K_{1,3}.
  CHECK(k_minus(3, 3).delete_vertices(0b000011) == complete_bipartite(1, 3));

  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const Graph g = random_graph(rng, 9);
    const int v = static_cast<int>(rng() % 9);
    CHECK(g.delete_vertices(vertex_bit(v)).edge_count() == g.edge_count() - g.degree(v));
  }
}

TEST_CASE("edges_between") {
  const Graph k34 = complete_bipartite(3, 4);
  CHECK(k34.edges_between(0b0000111, 0b1111000) == 12);
  CHECK(k34.edges_between(0, 0b1111000) == 0);
  CHECK_THROWS_AS(k34.edges_between(0b11, 0b110), std::invalid_argument);
  CHECK_THROWS_AS(k34.edges_between(vertex_bit(9), 0b1), std::out_of_range);

  // A graph where the edge {u,v} lies in no triangle and u, v see the whole
  // rest: u, v attached to disjoint halves of k_minus(2,2), plus the edge uv.
  Graph g(6);
  for (const auto& [a, b] : k_minus(2, 2).edges()) g.add_edge(a, b);
  g.add_edge(4, 5);
  g.add_edge(4, 0);
  g.add_edge(4, 2);
  g.add_edge(5, 1);
  g.add_edge(5, 3);
  CHECK(g.edge_count() == 10);  // floor(36/4) + 1
  CHECK(g.edges_between(0b110000, 0b001111) == 4);  // n - 2
  CHECK((g.row(4) & g.row(5)) == 0);  // {u,v} lies in no triangle
}

TEST_CASE("isomorphism: relabelings and small non-isomorphic pairs") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8));
    CHECK(are_isomorphic(g, shuffled(rng, g)));
  }
  CHECK_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
  CHECK_FALSE(are_isomorphic(Graph(3), Graph(4)));
  CHECK(are_isomorphic(Graph(0), Graph(0)));

  // same class sizes, classes swapped in the labeling
  Graph swapped(6);
  for (int y = 0; y < 3; ++y)
    for (int x = 3; x < 6; ++x) swapped.add_edge(y, x);
  swapped.add_edge(3, 4);
  CHECK(are_isomorphic(k_minus(3, 3), swapped));

  // C_6 vs two disjoint triangles: equal degree sequences, different
  // triangle fingerprints
  Graph two_triangles(6);
  for (const auto& [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
    two_triangles.add_edge(a, b);
  CHECK_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
}

TEST_CASE("isomorphism is an equivalence relation on a mixed pool") {
  std::mt19937_64 rng(31);
  std::vector<Graph> pool;
  for (int i = 0; i < 12; ++i) pool.push_back(random_graph(rng, 6));
  for (const Graph& g : pool) CHECK(are_isomorphic(g, g));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      CHECK(are_isomorphic(pool[i], pool[j]) == are_isomorphic(pool[j], pool[i]));
  // transitivity spot-check on triples
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (are_isomorphic(pool[i], pool[j]) && are_isomorphic(pool[j], pool[k]))
          CHECK(are_isomorphic(pool[i], pool[k]));
}
