#include <doctest.h>

#include <random>

#include "extremal/covering.hpp"
#include "extremal/families.hpp"
#include "test_util.hpp"

using namespace extremal;
using namespace extremal::testing;

TEST_CASE("is_triangle_cover") {
  const Graph c5 = cycle_graph(5);
  CHECK(is_triangle_cover(c5, 0));
  CHECK(is_triangle_cover(c5, 0b10101));
  CHECK_FALSE(is_triangle_cover(complete_graph(4), 0));
  CHECK(is_triangle_cover(k_minus(3, 3), vertex_bit(0)));
  CHECK_THROWS_AS(is_triangle_cover(c5, vertex_bit(5)), std::out_of_range);
}

TEST_CASE("tau on fixed graphs") {
  CHECK(tau_triangle(cycle_graph(6)).tau == 0);
  CHECK(tau_triangle(cycle_graph(6)).cover == 0);
  CHECK(tau_triangle(k_minus(4, 4)).tau == 1);
  CHECK(tau_triangle(complete_graph(5)).tau == 3);
  CHECK(tau_triangle(k_st(10, 2, 1)).tau == 2);
  CHECK(tau_triangle_oracle(complete_graph(4)) == 2);
  CHECK(tau_triangle_oracle(k_st(10, 2, 1)) == 2);
  CHECK(tau_triangle(Graph(0)).tau == 0);
}

TEST_CASE("solver matches the oracle on every labeled graph with n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    const int slots = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const CoverCertificate cert = tau_triangle(g);
      CHECK(cert.tau == tau_triangle_oracle(g));
      CHECK(certificate_valid(g, cert));
    }
  }
}

TEST_CASE("solver matches the oracle on random graphs") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 300; ++round) {
    const Graph g = random_graph(rng, 8);
    const CoverCertificate cert = tau_triangle(g);
    CHECK(cert.tau == tau_triangle_oracle(g));
    CHECK(certificate_valid(g, cert));
    CHECK((cert.tau == 0) == (count_triangles(g) == 0));
    for (int s = 0; s <= 5; ++s) CHECK(tau_at_least(g, s) == (cert.tau >= s));
  }
}

TEST_CASE("certificates are sound and deterministic") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_graph(rng, 9);
    const CoverCertificate a = tau_triangle(g);
    const CoverCertificate b = tau_triangle(g);
    CHECK(a.cover == b.cover);
    CHECK(a.packing == b.packing);
    CHECK(certificate_valid(g, a));
    CHECK(static_cast<int>(a.packing.size()) <= a.tau);
    CHECK(is_triangle_cover(g, a.cover));
  }

  // packing triangles must be triangles of the graph and vertex-disjoint
  const Graph k9 = complete_graph(9);
  const auto packing = greedy_triangle_packing(k9);
  CHECK(packing.size() == 3);
  CHECK(packing[0] == Triangle{0, 1, 2});
  CHECK(packing[1] == Triangle{3, 4, 5});
  CHECK(packing[2] == Triangle{6, 7, 8});
}

TEST_CASE("tau never decreases when an edge is added") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 150; ++round) {
    Graph g = random_graph(rng, 8, 0.4);
    const int before = tau_triangle(g).tau;
    int u = static_cast<int>(rng() % 8), v = static_cast<int>(rng() % 8);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    CHECK(tau_triangle(g).tau >= before);
  }
}

TEST_CASE("broken certificates are rejected") {
  const Graph g = k_minus(3, 3);
  CoverCertificate cert = tau_triangle(g);
  CHECK(certificate_valid(g, cert));
  CoverCertificate wrong_size = cert;
  wrong_size.tau += 1;
  CHECK_FALSE(certificate_valid(g, wrong_size));
  CoverCertificate bad_cover = cert;
  bad_cover.cover = vertex_bit(2);  // vertex 2 misses the triangles
  CHECK_FALSE(certificate_valid(g, bad_cover));
  CoverCertificate bad_packing = cert;
  bad_packing.packing = {{0, 1, 2}};  // not a triangle of g
  CHECK_FALSE(certificate_valid(g, bad_packing));
}
