#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Named constructions. Every generator uses a fixed first-vertices layout so
// graph6 output is reproducible byte for byte.
//
//   complete_bipartite(i, m)   classes X = 0..i-1, Y = i..i+m-1
//   k_minus(i, m)              complete bipartite plus the edge {0,1} in X
//   k_t(i, m)                  complete bipartite plus the path 0-1-2 in X,
//                              minus the edge {1, i} (one cross edge at the
//                              shared path vertex)
//   turan(n, r)                balanced complete r-partite graph
//   turan_minus(n, k)          turan(n, k-1) plus one edge inside V1
//   turan_sqsubset(n, k)       turan(n, k-1) plus an edge in V1 and one in
//                              V2, minus one cross edge between them
//   k_st(n, s, t)              balanced complete bipartite plus s-1 matching
//                              edges in V1 and one edge in V2, minus s-t
//                              cross edges at the first V2 vertex

Graph complete_bipartite(int i, int m);
Graph k_minus(int i, int m);
Graph k_t(int i, int m);
Graph turan(int n, int r);
Graph turan_minus(int n, int k);
Graph turan_sqsubset(int n, int k);
Graph k_st(int n, int s, int t);

// Part sizes of the balanced r-partition: ceil(n/r) repeated (n mod r)
// times, then floor(n/r).
std::vector<int> turan_part_sizes(int n, int r);

// Edge count of turan(n, r).
long long turan_edge_count(int n, int r);

enum class FamilyKind {
  CompleteBipartite,
  KMinus,
  KT,
  Turan,
  TuranMinus,
  TuranSqsubset,
  KST,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::CompleteBipartite;
  std::vector<int> params;

  bool operator==(const FamilySpec&) const = default;

  // Text grammar: kbip:i,m  kminus:i,m  kt:i,m  turan:n,r  turanminus:n,k
  // turansq:n,k  kst:n,s,t
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

// Closed-form predictions; every value present must match the generated
// graph exactly.
struct Prediction {
  long long edges = 0;
  std::optional<long long> triangles;
  std::optional<std::pair<int, long long>> kcliques;  // (k, number of K_k copies)
  std::optional<int> tau;  // present only when the claim's validity condition holds
};

Graph build(const FamilySpec& spec);
Prediction predict(const FamilySpec& spec);

}  // namespace extremal
