#include "extremal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "extremal/counting.hpp"
#include "extremal/covering.hpp"
#include "extremal/enumeration.hpp"
#include "extremal/families.hpp"
#include "extremal/graph6.hpp"

namespace extremal {

namespace {

constexpr int kShardCount = 64;
constexpr int kViolationCap = 64;  // per shard

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

long long mantel_threshold(int n) { return static_cast<long long>(n) * n / 4; }

EnumerationTask shard_task(int n, long long m, int shard) {
  EnumerationTask task;
  task.n = n;
  task.m = m;
  task.shard_count = kShardCount;
  task.shard_id = shard;
  return task;
}

void require_arg(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// Runs fn(shard_id) for every shard on up to opts.threads workers. The shard
// count is fixed, so results do not depend on the thread count.
template <class Partial, class Fn>
std::vector<Partial> run_shards(const VerifyOptions& opts, Fn&& fn) {
  std::vector<Partial> partials(kShardCount);
  const int threads = std::clamp(opts.threads, 1, kShardCount);
  if (threads == 1) {
    for (int s = 0; s < kShardCount; ++s) partials[static_cast<std::size_t>(s)] = fn(s);
    return partials;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) {
    pool.emplace_back([&] {
      while (true) {
        const int s = next.fetch_add(1);
        if (s >= kShardCount) return;
        partials[static_cast<std::size_t>(s)] = fn(s);
      }
    });
  }
  for (auto& t : pool) t.join();
  return partials;
}

// Minimum tracker with a capped list of graph6 witnesses attaining it.
struct MinTracker {
  long long best = LLONG_MAX;
  std::vector<std::string> witnesses;

  bool wants(long long value, int cap) const {
    return value < best || (value == best && static_cast<int>(witnesses.size()) < cap);
  }
  void offer(long long value, const Graph& g, int cap) {
    if (value < best) {
      best = value;
      witnesses.assign(1, to_graph6(g));
    } else if (value == best && static_cast<int>(witnesses.size()) < cap) {
      witnesses.push_back(to_graph6(g));
    }
  }
  void merge(const MinTracker& other, int cap) {
    if (other.best < best) {
      best = other.best;
      witnesses = other.witnesses;
    } else if (other.best == best && best != LLONG_MAX) {
      for (const auto& w : other.witnesses)
        if (static_cast<int>(witnesses.size()) < cap) witnesses.push_back(w);
    }
  }
};

struct ViolationList {
  std::vector<std::string> items;
  bool truncated = false;

  void add(const Graph& g) {
    if (static_cast<int>(items.size()) < kViolationCap)
      items.push_back(to_graph6(g));
    else
      truncated = true;
  }
  void merge(const ViolationList& other) {
    for (const auto& c : other.items) items.push_back(c);
    truncated = truncated || other.truncated;
  }
};

void append_truncation_note(VerificationReport& report, bool truncated) {
  if (truncated) report.notes.push_back("counterexample list truncated");
}

// Shared engine for the edge-count lower-bound claims: scans all (n, m)
// graphs, tracks the minimum triangle count, and flags graphs below `bound`.
VerificationReport scan_min_triangles(const char* claim, int n, long long m, long long bound,
                                      const VerifyOptions& opts) {
  const auto start = Clock::now();
  struct Partial {
    EnumerationStats stats;
    MinTracker min;
    ViolationList violations;
  };
  auto partials = run_shards<Partial>(opts, [&](int shard) {
    Partial p;
    p.stats = enumerate_labeled(shard_task(n, m, shard), [&](const Graph& g) {
      const long long t = count_triangles(g);
      p.min.offer(t, g, opts.witness_cap);
      if (t < bound) p.violations.add(g);
    });
    return p;
  });

  VerificationReport report;
  report.claim_id = claim;
  MinTracker min;
  ViolationList violations;
  for (const Partial& p : partials) {
    report.space_size += p.stats.visited;
    min.merge(p.min, opts.witness_cap);
    violations.merge(p.violations);
  }
  report.extremal_value = min.best;
  report.witnesses = std::move(min.witnesses);
  report.counterexamples = std::move(violations.items);
  append_truncation_note(report, violations.truncated);
  report.notes.push_back("bound: minimum triangle count >= " + std::to_string(bound));
  report.elapsed_ms = ms_since(start);
  return report;
}

std::string grid_point(const char* kind, int big_a, int big_b, int a, int b, long long f) {
  std::ostringstream os;
  os << kind << " A=" << big_a << " B=" << big_b << " a=" << a << " b=" << b << " f=" << f;
  return os.str();
}

}  // namespace

VerificationReport check_mantel(int n, const VerifyOptions& opts) {
  require_arg(n >= 3 && n <= 8, "check_mantel: need 3 <= n <= 8");
  const auto start = Clock::now();
  const long long threshold = mantel_threshold(n);
  const long long slots = static_cast<long long>(n) * (n - 1) / 2;

  VerificationReport report;
  report.claim_id = "mantel";
  report.params = {{"n", n}};

  // At the threshold: every triangle-free graph must be the balanced
  // complete bipartite graph.
  struct Partial {
    EnumerationStats stats;
    std::vector<Graph> triangle_free;
    bool truncated = false;
  };
  auto partials = run_shards<Partial>(opts, [&](int shard) {
    Partial p;
    p.stats = enumerate_labeled(shard_task(n, threshold, shard), [&](const Graph& g) {
      if (has_triangle(g)) return;
      if (p.triangle_free.size() < 256)
        p.triangle_free.push_back(g);
      else
        p.truncated = true;
    });
    return p;
  });

  std::vector<Graph> pool;
  bool truncated = false;
  for (Partial& p : partials) {
    report.space_size += p.stats.visited;
    for (Graph& g : p.triangle_free) pool.push_back(std::move(g));
    truncated = truncated || p.truncated;
  }
  const Graph expected = complete_bipartite(n / 2, n - n / 2);
  const auto classes = isomorphism_classes(pool);
  for (const IsoClass& c : classes) {
    report.witnesses.push_back(to_graph6(c.representative));
    if (!are_isomorphic(c.representative, expected)) report.counterexamples.push_back(to_graph6(c.representative));
  }
  report.notes.push_back("triangle-free graphs at " + std::to_string(threshold) + " edges: " +
                         std::to_string(pool.size()) + " labeled, " + std::to_string(classes.size()) +
                         " classes");
  if (truncated) report.notes.push_back("triangle-free pool truncated");

  // Above the threshold: no triangle-free graph at any edge count.
  for (long long m = threshold + 1; m <= slots; ++m) {
    struct TailPartial {
      EnumerationStats stats;
      ViolationList violations;
    };
    auto tail = run_shards<TailPartial>(opts, [&](int shard) {
      TailPartial p;
      p.stats = enumerate_labeled(shard_task(n, m, shard), [&](const Graph& g) {
        if (!has_triangle(g)) p.violations.add(g);
      });
      return p;
    });
    ViolationList violations;
    for (TailPartial& p : tail) {
      report.space_size += p.stats.visited;
      violations.merge(p.violations);
    }
    for (auto& c : violations.items) report.counterexamples.push_back(std::move(c));
    append_truncation_note(report, violations.truncated);
  }

  report.extremal_value = threshold;
  report.elapsed_ms = ms_since(start);
  revalidate(report);
  return report;
}

VerificationReport check_erdos(int n, int t, const VerifyOptions& opts) {
  require_arg(t >= 1 && t <= 3, "check_erdos: need 1 <= t <= 3");
  require_arg(n > 2 * t, "check_erdos: need n > 2t");
  require_arg(n <= 8, "check_erdos: need n <= 8");
  const long long bound = static_cast<long long>(t) * (n / 2);
  VerificationReport report = scan_min_triangles("erdos", n, mantel_threshold(n) + t, bound, opts);
  report.params = {{"n", n}, {"t", t}};
  revalidate(report);
  return report;
}

VerificationReport check_lovasz_simonovits_bound(int n, int t, const VerifyOptions& opts) {
  require_arg(n <= 8, "check_lovasz_simonovits_bound: need n <= 8");
  require_arg(t >= 1 && 2 * t < n, "check_lovasz_simonovits_bound: need 1 <= t < n/2");
  const long long bound = static_cast<long long>(t) * (n / 2);
  VerificationReport report =
      scan_min_triangles("lovasz_simonovits_bound", n, mantel_threshold(n) + t, bound, opts);
  report.params = {{"n", n}, {"t", t}};
  revalidate(report);
  return report;
}

VerificationReport check_turan(int n, int k, const VerifyOptions& opts) {
  require_arg(k >= 3 && k <= n && n <= 8, "check_turan: need 3 <= k <= n <= 8");
  const auto start = Clock::now();
  const long long m = turan_edge_count(n, k - 1) + 1;

  struct Partial {
    EnumerationStats stats;
    MinTracker min;
    ViolationList violations;
  };
  auto partials = run_shards<Partial>(opts, [&](int shard) {
    Partial p;
    p.stats = enumerate_labeled(shard_task(n, m, shard), [&](const Graph& g) {
      const long long copies = count_cliques(g, k);
      p.min.offer(copies, g, opts.witness_cap);
      if (copies == 0) p.violations.add(g);
    });
    return p;
  });

  VerificationReport report;
  report.claim_id = "turan";
  report.params = {{"n", n}, {"k", k}};
  MinTracker min;
  ViolationList violations;
  for (const Partial& p : partials) {
    report.space_size += p.stats.visited;
    min.merge(p.min, opts.witness_cap);
    violations.merge(p.violations);
  }
  report.extremal_value = min.best;
  report.witnesses = std::move(min.witnesses);
  report.counterexamples = std::move(violations.items);
  append_truncation_note(report, violations.truncated);

  if (count_cliques(turan(n, k - 1), k) != 0)
    throw std::logic_error("check_turan: the extremal construction is not K_k-free");
  report.notes.push_back("turan(" + std::to_string(n) + "," + std::to_string(k - 1) +
                         ") itself is K_k-free");
  report.elapsed_ms = ms_since(start);
  revalidate(report);
  return report;
}

namespace {

// The classification list, restricted to members that actually satisfy the
// hypotheses at this n (the small odd cases drop some of them), deduplicated
// up to isomorphism.
std::vector<Graph> lemma1_expected(int n) {
  std::vector<Graph> members;
  if (n % 2 == 0) {
    members.push_back(k_minus(n / 2, n / 2));
  } else {
    members.push_back(k_minus((n - 1) / 2, (n + 1) / 2));
    members.push_back(k_minus((n + 1) / 2, (n - 1) / 2));
    if ((n + 1) / 2 >= 3) members.push_back(k_t((n + 1) / 2, (n - 1) / 2));
  }
  std::vector<Graph> qualified;
  for (Graph& g : members) {
    const long long t = count_triangles(g);
    if (t < 1 || t > n - 3) continue;
    if (tau_triangle(g).tau != 1) continue;
    qualified.push_back(std::move(g));
  }
  return reduce_to_isomorphism_classes(qualified);
}

}  // namespace

VerificationReport check_lemma1(int n, const VerifyOptions& opts) {
  require_arg(n >= 5 && n <= 8, "check_lemma1: need 5 <= n <= 8");
  const auto start = Clock::now();
  const long long m = mantel_threshold(n) + 1;

  struct Partial {
    EnumerationStats stats;
    std::vector<Graph> pool;
    bool truncated = false;
  };
  auto partials = run_shards<Partial>(opts, [&](int shard) {
    Partial p;
    p.stats = enumerate_labeled(shard_task(n, m, shard), [&](const Graph& g) {
      const long long t = count_triangles(g);
      if (t < 1 || t > n - 3) return;
      if (tau_at_least(g, 2)) return;  // keep only tau == 1
      if (p.pool.size() < 1024)
        p.pool.push_back(g);
      else
        p.truncated = true;
    });
    return p;
  });

  VerificationReport report;
  report.claim_id = "lemma1";
  report.params = {{"n", n}};
  std::vector<Graph> pool;
  bool truncated = false;
  for (Partial& p : partials) {
    report.space_size += p.stats.visited;
    for (Graph& g : p.pool) pool.push_back(std::move(g));
    truncated = truncated || p.truncated;
  }
  if (truncated) report.notes.push_back("classification pool truncated");

  const std::vector<Graph> expected = lemma1_expected(n);
  const auto classes = isomorphism_classes(pool);
  report.extremal_value = static_cast<long long>(classes.size());
  std::vector<bool> matched(expected.size(), false);
  for (const IsoClass& c : classes) {
    const std::string g6 = to_graph6(c.representative);
    report.witnesses.push_back(g6);
    report.notes.push_back("class " + g6 + ": " + std::to_string(c.size) + " labeled copies");
    bool found = false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (are_isomorphic(c.representative, expected[i])) {
        matched[i] = true;
        found = true;
        break;
      }
    }
    if (!found) report.counterexamples.push_back(g6);
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!matched[i])
      report.notes.push_back("listed class " + to_graph6(expected[i]) +
                             " not realized by any graph in the slice");
  }
  report.elapsed_ms = ms_since(start);
  revalidate(report);
  return report;
}

VerificationReport check_lemma3(int a_max, int b_max, const VerifyOptions&) {
  require_arg(a_max >= 1 && b_max >= 1, "check_lemma3: grid bounds must be positive");
  const auto start = Clock::now();
  VerificationReport report;
  report.claim_id = "lemma3";
  report.params = {{"a_max", a_max}, {"b_max", b_max}};
  long long min_slack = LLONG_MAX;
  for (int big_a = 1; big_a <= a_max; ++big_a) {
    for (int big_b = 1; big_b <= b_max; ++big_b) {
      const long long bound = std::min(big_a, big_b);
      for (int a = 1; a <= big_a; ++a) {
        for (int b = 1; b <= big_b; ++b) {
          ++report.space_size;
          const long long f = static_cast<long long>(a) * b +
                              static_cast<long long>(big_a - a) * (big_b - b);
          min_slack = std::min(min_slack, f - bound);
          if (f < bound) {
            report.counterexamples.push_back(grid_point("ineq", big_a, big_b, a, b, f));
            continue;
          }
          if (f == bound) {
            const bool allowed = (bound == big_a && a == big_a && b == 1) ||
                                 (bound == big_b && a == 1 && b == big_b);
            if (!allowed) report.counterexamples.push_back(grid_point("eq", big_a, big_b, a, b, f));
          }
        }
      }
    }
  }
  report.extremal_value = min_slack;
  report.notes.push_back("counterexample entries are grid tuples, not graphs");
  report.notes.push_back(
      "eq entries are equality points outside the stated (a=A,b=1)/(a=1,b=B) forms");
  report.elapsed_ms = ms_since(start);
  revalidate(report);
  return report;
}

VerificationReport check_main(int n, const VerifyOptions& opts) {
  require_arg(n >= 3 && n <= 8, "check_main: need 3 <= n <= 8");
  const auto start = Clock::now();
  const long long m = mantel_threshold(n) + 1;

  struct Partial {
    EnumerationStats stats;
    MinTracker min;  // min T over graphs with tau >= 2
    ViolationList violations;
  };
  auto partials = run_shards<Partial>(opts, [&](int shard) {
    Partial p;
    p.stats = enumerate_labeled(shard_task(n, m, shard), [&](const Graph& g) {
      const long long t = count_triangles(g);
      // tau is only solved for graphs that could be counterexamples or
      // could lower the minimum; everything else is settled by t alone.
      if (t > n - 3 && !p.min.wants(t, opts.witness_cap)) return;
      if (!tau_at_least(g, 2)) return;
      p.min.offer(t, g, opts.witness_cap);
      if (t <= n - 3) p.violations.add(g);
    });
    return p;
  });

  VerificationReport report;
  report.claim_id = "main";
  report.params = {{"n", n}};
  MinTracker min;
  ViolationList violations;
  for (const Partial& p : partials) {
    report.space_size += p.stats.visited;
    min.merge(p.min, opts.witness_cap);
    violations.merge(p.violations);
  }
  if (min.best != LLONG_MAX) {
    report.extremal_value = min.best;
    report.witnesses = std::move(min.witnesses);
  } else {
    report.notes.push_back("no graph with tau >= 2 in the slice");
  }
  report.counterexamples = std::move(violations.items);
  append_truncation_note(report, violations.truncated);
  report.notes.push_back("bound: tau = 1 or at least " + std::to_string(n - 2) + " triangles");
  report.elapsed_ms = ms_since(start);
  revalidate(report);
  return report;
}

VerificationReport check_conjecture1(int n, int k, const VerifyOptions& opts) {
  require_arg(k >= 3 && k <= n && n >= 3 && n <= 8, "check_conjecture1: need 3 <= k <= n <= 8");
  const auto start = Clock::now();
  const long long m = turan_edge_count(n, k - 1) + 1;

  struct Partial {
    EnumerationStats stats;
    MinTracker min;  // min K_k count over graphs with empty copy intersection
    unsigned long long excluded = 0;
  };
  auto partials = run_shards<Partial>(opts, [&](int shard) {
    Partial p;
    p.stats = enumerate_labeled(shard_task(n, m, shard), [&](const Graph& g) {
      const CliqueSummary s = summarize_cliques(g, k);
      if (s.count == 0) {
        ++p.excluded;
        return;
      }
      if (s.common != 0) return;
      p.min.offer(s.count, g, opts.witness_cap);
    });
    return p;
  });

  VerificationReport report;
  report.claim_id = "conjecture1";
  report.params = {{"n", n}, {"k", k}};
  MinTracker min;
  unsigned long long excluded = 0;
  for (const Partial& p : partials) {
    report.space_size += p.stats.visited;
    min.merge(p.min, opts.witness_cap);
    excluded += p.excluded;
  }
  report.notes.push_back("graphs with zero K_k copies excluded from minimization: " +
                         std::to_string(excluded));

  const auto sizes = turan_part_sizes(n, k - 1);
  std::optional<long long> bound;
  if (sizes[0] >= 2 && sizes[1] >= 2) {
    long long value = sizes[0] + sizes[1] - 2;
    for (std::size_t j = 2; j < sizes.size(); ++j) value *= sizes[j];
    bound = value;
    const Graph construction = turan_sqsubset(n, k);
    if (count_cliques(construction, k) != value)
      throw std::logic_error("check_conjecture1: construction does not attain its formula value");
    report.notes.push_back("construction " + to_graph6(construction) + " attains the value " +
                           std::to_string(value));
  } else {
    report.notes.push_back("two-split construction undefined at these parameters");
  }

  if (min.best != LLONG_MAX) {
    report.extremal_value = min.best;
    report.witnesses = min.witnesses;
    if (bound) {
      if (min.best < *bound) {
        for (const auto& w : min.witnesses) report.counterexamples.push_back(w);
        report.notes.push_back("exhaustive minimum " + std::to_string(min.best) +
                               " is below the conjectured value " + std::to_string(*bound));
      } else {
        report.notes.push_back("exhaustive minimum " + std::to_string(min.best) +
                               (min.best == *bound ? " matches" : " exceeds") +
                               " the conjectured value " + std::to_string(*bound));
      }
    }
  } else {
    report.notes.push_back("no graph with a nonempty copy set and empty intersection");
  }
  report.elapsed_ms = ms_since(start);
  revalidate(report);
  return report;
}

VerificationReport check_conjecture2(int n, int s, int t, const VerifyOptions& opts) {
  require_arg(t > 0 && t < s, "check_conjecture2: need 0 < t < s");
  require_arg(n >= 3 && n <= 8, "check_conjecture2: need 3 <= n <= 8");
  const long long m = mantel_threshold(n) + t;
  require_arg(m <= static_cast<long long>(n) * (n - 1) / 2, "check_conjecture2: edge count exceeds the space");
  const auto start = Clock::now();
  const long long bound =
      static_cast<long long>(s - 1) * (n / 2) + (n + 1) / 2 - 2LL * (s - t);

  struct Partial {
    EnumerationStats stats;
    MinTracker min;  // min T over graphs with tau >= s
  };
  auto partials = run_shards<Partial>(opts, [&](int shard) {
    Partial p;
    p.stats = enumerate_labeled(shard_task(n, m, shard), [&](const Graph& g) {
      const long long triangles = count_triangles(g);
      if (triangles < s) return;  // tau <= T
      if (!p.min.wants(triangles, opts.witness_cap)) return;
      if (!tau_at_least(g, s)) return;
      p.min.offer(triangles, g, opts.witness_cap);
    });
    return p;
  });

  VerificationReport report;
  report.claim_id = "conjecture2";
  report.params = {{"n", n}, {"s", s}, {"t", t}};
  MinTracker min;
  for (const Partial& p : partials) {
    report.space_size += p.stats.visited;
    min.merge(p.min, opts.witness_cap);
  }
  report.notes.push_back("conjectured minimum: " + std::to_string(bound));

  FamilySpec spec{FamilyKind::KST, {n, s, t}};
  const int half_up = (n + 1) / 2;
  const int half_down = n / 2;
  if (half_up >= 2 * (s - 1) && half_down >= 2) {
    const Graph construction = k_st(n, s, t);
    if (count_triangles(construction) != bound)
      throw std::logic_error("check_conjecture2: construction does not attain its formula value");
    const Prediction pred = predict(spec);
    if (pred.tau) {
      const int tau = tau_triangle(construction).tau;
      if (tau != *pred.tau)
        throw std::logic_error("check_conjecture2: construction tau differs from its claim");
      report.notes.push_back("construction " + to_graph6(construction) + " attains " +
                             std::to_string(bound) + " triangles with tau = " + std::to_string(tau));
    } else {
      report.notes.push_back("construction buildable but its tau = s claim needs larger n");
    }
  } else {
    report.notes.push_back("construction not buildable at these parameters");
  }

  if (min.best != LLONG_MAX) {
    report.extremal_value = min.best;
    report.witnesses = min.witnesses;
    if (min.best < bound) {
      for (const auto& w : min.witnesses) report.counterexamples.push_back(w);
      report.notes.push_back("exhaustive minimum " + std::to_string(min.best) +
                             " is below the conjectured value " + std::to_string(bound));
    } else {
      report.notes.push_back("exhaustive minimum " + std::to_string(min.best) +
                             (min.best == bound ? " matches" : " exceeds") +
                             " the conjectured value " + std::to_string(bound));
    }
  } else {
    report.notes.push_back("no graph with tau >= " + std::to_string(s) + " in the slice");
  }
  report.elapsed_ms = ms_since(start);
  revalidate(report);
  return report;
}

namespace {

long long param(const VerificationReport& report, const std::string& name) {
  for (const auto& [key, value] : report.params)
    if (key == name) return value;
  throw std::logic_error("revalidate: missing param " + name);
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("revalidate: " + what);
}

void revalidate_lemma3_entry(const std::string& entry) {
  std::istringstream is(entry);
  std::string kind;
  is >> kind;
  long long big_a = 0, big_b = 0, a = 0, b = 0, f = 0;
  std::string token;
  auto read = [&](const char* name) {
    is >> token;
    expect(token.rfind(name, 0) == 0, "lemma3 entry field order");
    return std::stoll(token.substr(std::string(name).size()));
  };
  big_a = read("A=");
  big_b = read("B=");
  a = read("a=");
  b = read("b=");
  f = read("f=");
  const long long recomputed = a * b + (big_a - a) * (big_b - b);
  expect(recomputed == f, "lemma3 entry arithmetic");
  const long long bound = std::min(big_a, big_b);
  if (kind == "ineq") {
    expect(f < bound, "lemma3 inequality entry does not violate the bound");
  } else if (kind == "eq") {
    expect(f == bound, "lemma3 equality entry is not an equality point");
    const bool allowed = (bound == big_a && a == big_a && b == 1) ||
                         (bound == big_b && a == 1 && b == big_b);
    expect(!allowed, "lemma3 equality entry matches an allowed form");
  } else {
    throw std::logic_error("revalidate: unknown lemma3 entry kind");
  }
}

}  // namespace

void revalidate(const VerificationReport& report) {
  const std::string& id = report.claim_id;
  if (id == "lemma3") {
    for (const auto& entry : report.counterexamples) revalidate_lemma3_entry(entry);
    return;
  }

  const int n = static_cast<int>(param(report, "n"));
  const auto decode = [&](const std::string& g6) {
    Graph g = from_graph6(g6);
    expect(g.vertex_count() == n, "graph has the wrong vertex count");
    return g;
  };

  if (id == "mantel") {
    const long long threshold = mantel_threshold(n);
    const Graph expected = complete_bipartite(n / 2, n - n / 2);
    for (const auto& c : report.counterexamples) {
      const Graph g = decode(c);
      expect(!has_triangle(g), "mantel counterexample has a triangle");
      expect(g.edge_count() > threshold ||
                 (g.edge_count() == threshold && !are_isomorphic(g, expected)),
             "mantel counterexample does not violate the claim");
    }
    for (const auto& w : report.witnesses) {
      const Graph g = decode(w);
      expect(!has_triangle(g) && g.edge_count() == threshold, "mantel witness malformed");
    }
  } else if (id == "erdos" || id == "lovasz_simonovits_bound") {
    const long long t = param(report, "t");
    const long long m = mantel_threshold(n) + t;
    const long long bound = t * (n / 2);
    for (const auto& c : report.counterexamples) {
      const Graph g = decode(c);
      expect(g.edge_count() == m, "counterexample edge count");
      expect(count_triangles_oracle(g) < bound, "counterexample does not beat the bound");
    }
    for (const auto& w : report.witnesses) {
      const Graph g = decode(w);
      expect(g.edge_count() == m, "witness edge count");
      expect(count_triangles_oracle(g) == report.extremal_value, "witness is not extremal");
    }
  } else if (id == "turan") {
    const int k = static_cast<int>(param(report, "k"));
    const long long m = turan_edge_count(n, k - 1) + 1;
    for (const auto& c : report.counterexamples) {
      const Graph g = decode(c);
      expect(g.edge_count() == m, "counterexample edge count");
      expect(count_cliques(g, k) == 0, "counterexample contains a K_k");
    }
    for (const auto& w : report.witnesses) {
      const Graph g = decode(w);
      expect(g.edge_count() == m, "witness edge count");
      expect(count_cliques(g, k) == report.extremal_value, "witness is not extremal");
    }
  } else if (id == "lemma1") {
    const long long m = mantel_threshold(n) + 1;
    const std::vector<Graph> expected = lemma1_expected(n);
    for (const auto& w : report.witnesses) {
      const Graph g = decode(w);
      expect(g.edge_count() == m, "witness edge count");
      const long long t = count_triangles_oracle(g);
      expect(t >= 1 && t <= n - 3, "witness triangle count outside the hypothesis");
      expect(tau_triangle_oracle(g) == 1, "witness tau is not 1");
    }
    for (const auto& c : report.counterexamples) {
      const Graph g = decode(c);
      bool matches = false;
      for (const Graph& e : expected) matches = matches || are_isomorphic(g, e);
      expect(!matches, "lemma1 counterexample matches a listed class");
    }
  } else if (id == "main") {
    const long long m = mantel_threshold(n) + 1;
    for (const auto& c : report.counterexamples) {
      const Graph g = decode(c);
      expect(g.edge_count() == m, "counterexample edge count");
      expect(count_triangles_oracle(g) <= n - 3, "counterexample has too many triangles");
      expect(tau_triangle_oracle(g) >= 2, "counterexample tau is not at least 2");
    }
    for (const auto& w : report.witnesses) {
      const Graph g = decode(w);
      expect(g.edge_count() == m, "witness edge count");
      expect(count_triangles_oracle(g) == report.extremal_value, "witness is not extremal");
      expect(tau_triangle_oracle(g) >= 2, "witness tau is not at least 2");
    }
  } else if (id == "conjecture1") {
    const int k = static_cast<int>(param(report, "k"));
    const long long m = turan_edge_count(n, k - 1) + 1;
    for (const auto& w : report.witnesses) {
      const Graph g = decode(w);
      expect(g.edge_count() == m, "witness edge count");
      const CliqueSummary s = summarize_cliques(g, k);
      expect(s.count == report.extremal_value && s.count > 0 && s.common == 0,
             "witness does not attain the minimum with empty intersection");
    }
    const auto sizes = turan_part_sizes(n, k - 1);
    long long bound = sizes[0] + sizes[1] - 2;
    for (std::size_t j = 2; j < sizes.size(); ++j) bound *= sizes[j];
    for (const auto& c : report.counterexamples) {
      const Graph g = decode(c);
      const CliqueSummary s = summarize_cliques(g, k);
      expect(s.count > 0 && s.common == 0 && s.count < bound,
             "conjecture1 counterexample does not beat the conjectured value");
    }
  } else if (id == "conjecture2") {
    const int s = static_cast<int>(param(report, "s"));
    const long long t = param(report, "t");
    const long long m = mantel_threshold(n) + t;
    const long long bound =
        static_cast<long long>(s - 1) * (n / 2) + (n + 1) / 2 - 2LL * (s - t);
    for (const auto& w : report.witnesses) {
      const Graph g = decode(w);
      expect(g.edge_count() == m, "witness edge count");
      expect(count_triangles_oracle(g) == report.extremal_value, "witness is not extremal");
      expect(tau_triangle_oracle(g) >= s, "witness tau is below s");
    }
    for (const auto& c : report.counterexamples) {
      const Graph g = decode(c);
      expect(count_triangles_oracle(g) < bound && tau_triangle_oracle(g) >= s,
             "conjecture2 counterexample does not beat the conjectured value");
    }
  } else {
    throw std::logic_error("revalidate: unknown claim id " + id);
  }
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim_id"] = claim_id;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) p[key] = value;
  j["params"] = p;
  j["space_size"] = space_size;
  if (extremal_value)
    j["extremal_value"] = *extremal_value;
  else
    j["extremal_value"] = nullptr;
  j["witnesses"] = witnesses;
  j["counterexamples"] = counterexamples;
  j["notes"] = notes;
  j["elapsed_ms"] = elapsed_ms;
  j["holds"] = holds();
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "claim: " << claim_id << '\n';
  os << "params:";
  for (const auto& [key, value] : params) os << ' ' << key << '=' << value;
  os << '\n';
  os << "space_size: " << space_size << '\n';
  os << "extremal_value: ";
  if (extremal_value)
    os << *extremal_value;
  else
    os << "none";
  os << '\n';
  os << "witnesses:";
  for (const auto& w : witnesses) os << ' ' << w;
  os << '\n';
  os << "counterexamples:";
  if (counterexamples.empty())
    os << " (none)";
  else
    for (const auto& c : counterexamples) os << ' ' << c;
  os << '\n';
  for (const auto& note : notes) os << "note: " << note << '\n';
  os << "elapsed_ms: " << elapsed_ms << '\n';
  os << "result: " << (holds() ? "HOLDS" : "COUNTEREXAMPLE") << '\n';
  return os.str();
}

}  // namespace extremal
