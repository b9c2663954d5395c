#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Outcome of one claim checker. `counterexamples` empty means the claim held
// on the scanned range; whatever is listed there independently fails the
// claim when decoded again (revalidate enforces this).
struct VerificationReport {
  std::string claim_id;
  std::vector<std::pair<std::string, long long>> params;
  unsigned long long space_size = 0;          // graphs or grid points examined
  std::optional<long long> extremal_value;    // min/max achieved, when meaningful
  std::vector<std::string> witnesses;         // graph6 of extremum attainers
  std::vector<std::string> counterexamples;   // graph6 (grid tuples for lemma3)
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool holds() const { return counterexamples.empty(); }
  std::string to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  int threads = 1;
  int witness_cap = 8;
};

// Maximum edge count of a triangle-free graph, and uniqueness of the
// balanced complete bipartite extremal graph.
VerificationReport check_mantel(int n, const VerifyOptions& opts = {});

// Graphs with floor(n^2/4)+t edges (t <= 3, n > 2t) have at least
// t*floor(n/2) triangles.
VerificationReport check_erdos(int n, int t, const VerifyOptions& opts = {});

// Same bound for 1 <= t < n/2.
VerificationReport check_lovasz_simonovits_bound(int n, int t, const VerifyOptions& opts = {});

// Graphs with more than turan_edge_count(n, k-1) edges contain a K_k.
VerificationReport check_turan(int n, int k, const VerifyOptions& opts = {});

// Classification of graphs with floor(n^2/4)+1 edges, tau = 1 and at most
// n-3 triangles, up to isomorphism.
VerificationReport check_lemma1(int n, const VerifyOptions& opts = {});

// Grid check: f(a,b) = ab + (A-a)(B-b) >= min(A,B) on 1<=a<=A, 1<=b<=B,
// plus the equality-point characterization.
VerificationReport check_lemma3(int a_max, int b_max, const VerifyOptions& opts = {});

// Main claim: every graph with floor(n^2/4)+1 edges has a one-vertex
// triangle cover or at least n-2 triangles.
VerificationReport check_main(int n, const VerifyOptions& opts = {});

// Minimum number of K_k copies over graphs whose copies have empty common
// intersection, against the two-split construction value. Report-only.
VerificationReport check_conjecture1(int n, int k, const VerifyOptions& opts = {});

// Minimum triangle count over graphs with floor(n^2/4)+t edges and
// tau >= s, against the k_st construction value. Report-only.
VerificationReport check_conjecture2(int n, int s, int t, const VerifyOptions& opts = {});

// Decodes every witness and counterexample in the report and rechecks the
// property it was emitted for; throws std::logic_error on any mismatch.
void revalidate(const VerificationReport& report);

}  // namespace extremal
