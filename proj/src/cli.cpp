#include "extremal/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "extremal/counting.hpp"
#include "extremal/covering.hpp"
#include "extremal/enumeration.hpp"
#include "extremal/families.hpp"
#include "extremal/graph6.hpp"
#include "extremal/verify.hpp"

namespace extremal::cli {

namespace {

int default_threads() {
  if (const char* env = std::getenv("EXTREMAL_THREADS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 1;
}

// Graph arguments are either a literal graph6 string or `-` for one graph
// per line on the input stream.
std::vector<Graph> read_graph_arg(const std::string& arg, std::istream& in) {
  std::vector<Graph> graphs;
  if (arg == "-") {
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
      if (line.empty()) continue;
      graphs.push_back(from_graph6(line));
    }
  } else {
    graphs.push_back(from_graph6(arg));
  }
  return graphs;
}

std::string format_cover(VertexSet cover) {
  if (cover == 0) return "-";
  std::string out;
  for (int v : set_to_vertices(cover)) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangle and clique extremal-graph toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Emit a named construction as graph6");
  std::string gen_spec;
  gen->add_option("spec", gen_spec,
                  "Family spec: kbip:i,m kminus:i,m kt:i,m turan:n,r turanminus:n,k "
                  "turansq:n,k kst:n,s,t")
      ->required();

  auto* count = app.add_subcommand("count", "Count triangles (or k-cliques) per input graph");
  std::string count_graph;
  int count_k = 0;
  count->add_option("graph", count_graph, "graph6 string or - for stdin")->required();
  count->add_option("--cliques", count_k, "Count k-cliques instead of triangles");

  auto* tau_cmd = app.add_subcommand("tau", "Exact triangle covering number with a witness cover");
  std::string tau_graph;
  tau_cmd->add_option("graph", tau_graph, "graph6 string or - for stdin")->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism test for two graph6 strings");
  std::string iso_a, iso_b;
  iso->add_option("first", iso_a)->required();
  iso->add_option("second", iso_b)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Scan all labeled graphs with fixed n, m");
  int enum_n = 0;
  long long enum_m = 0;
  int enum_shards = 1;
  int enum_shard = -1;
  int enum_threads = default_threads();
  std::optional<long long> enum_min_t, enum_max_t;
  std::optional<int> enum_min_tau, enum_max_tau;
  enumerate->add_option("n", enum_n, "vertex count")->required();
  enumerate->add_option("m", enum_m, "edge count")->required();
  enumerate->add_option("--shards", enum_shards, "shard count")->check(CLI::Range(1, 1 << 20));
  enumerate->add_option("--shard", enum_shard, "run only this shard id");
  enumerate->add_option("--threads", enum_threads, "worker threads across shards");
  enumerate->add_option("--min-triangles", enum_min_t);
  enumerate->add_option("--max-triangles", enum_max_t);
  enumerate->add_option("--min-tau", enum_min_tau);
  enumerate->add_option("--max-tau", enum_max_tau);

  auto* verify = app.add_subcommand("verify", "Check a claim exhaustively and report");
  std::string claim;
  int v_n = -1, v_t = -1, v_s = -1, v_k = -1, v_a = -1, v_b = -1;
  int v_threads = default_threads();
  std::string json_target;
  verify
      ->add_option("claim", claim,
                   "mantel | erdos | turan | lovasz_simonovits_bound | lemma1 | lemma3 | main | "
                   "conjecture1 | conjecture2")
      ->required();
  verify->add_option("--n", v_n);
  verify->add_option("--t", v_t);
  verify->add_option("--s", v_s);
  verify->add_option("--k", v_k);
  verify->add_option("--a", v_a, "lemma3 grid bound for A (default 60)");
  verify->add_option("--b", v_b, "lemma3 grid bound for B (default 60)");
  verify->add_option("--threads", v_threads);
  verify->add_option("--json", json_target, "write the report as JSON to this path (- for stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) {
      out << to_graph6(build(FamilySpec::parse(gen_spec))) << '\n';
      return 0;
    }

    if (count->parsed()) {
      for (const Graph& g : read_graph_arg(count_graph, in)) {
        if (count->count("--cliques"))
          out << count_cliques(g, count_k) << '\n';
        else
          out << count_triangles(g) << '\n';
      }
      return 0;
    }

    if (tau_cmd->parsed()) {
      for (const Graph& g : read_graph_arg(tau_graph, in)) {
        const CoverCertificate cert = tau_triangle(g);
        out << cert.tau << ' ' << format_cover(cert.cover) << '\n';
      }
      return 0;
    }

    if (iso->parsed()) {
      const bool same = are_isomorphic(from_graph6(iso_a), from_graph6(iso_b));
      out << (same ? "isomorphic" : "non-isomorphic") << '\n';
      return same ? 0 : 1;
    }

    if (enumerate->parsed()) {
      EnumerationTask task{enum_n, enum_m, enum_shards, 0,
                           enum_min_t, enum_max_t, enum_min_tau, enum_max_tau};
      std::vector<int> shard_ids;
      if (enum_shard >= 0) {
        shard_ids.push_back(enum_shard);
      } else {
        for (int s = 0; s < enum_shards; ++s) shard_ids.push_back(s);
      }
      std::vector<EnumerationStats> stats(shard_ids.size());
      const int workers = std::clamp(enum_threads, 1, static_cast<int>(shard_ids.size()));
      std::atomic<std::size_t> next{0};
      auto pump = [&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= shard_ids.size()) return;
          EnumerationTask shard_task = task;
          shard_task.shard_id = shard_ids[i];
          stats[i] = enumerate_labeled(shard_task, [](const Graph&) {});
        }
      };
      if (workers == 1) {
        pump();
      } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(pump);
        for (auto& th : pool) th.join();
      }
      EnumerationStats total;
      for (std::size_t i = 0; i < shard_ids.size(); ++i) {
        out << "shard " << shard_ids[i] << " visited " << stats[i].visited << " passed "
            << stats[i].passed << '\n';
        total.visited += stats[i].visited;
        total.passed += stats[i].passed;
      }
      out << "total visited " << total.visited << " passed " << total.passed << '\n';
      return 0;
    }

    if (verify->parsed()) {
      VerifyOptions options;
      options.threads = v_threads;
      const auto need = [&](int value, const char* name) {
        if (value < 0) throw CLI::ValidationError("verify", std::string("missing --") + name);
        return value;
      };
      VerificationReport report;
      if (claim == "mantel") {
        report = check_mantel(need(v_n, "n"), options);
      } else if (claim == "erdos") {
        report = check_erdos(need(v_n, "n"), need(v_t, "t"), options);
      } else if (claim == "turan") {
        report = check_turan(need(v_n, "n"), need(v_k, "k"), options);
      } else if (claim == "lovasz_simonovits_bound") {
        report = check_lovasz_simonovits_bound(need(v_n, "n"), need(v_t, "t"), options);
      } else if (claim == "lemma1") {
        report = check_lemma1(need(v_n, "n"), options);
      } else if (claim == "lemma3") {
        report = check_lemma3(v_a >= 0 ? v_a : 60, v_b >= 0 ? v_b : 60, options);
      } else if (claim == "main") {
        report = check_main(need(v_n, "n"), options);
      } else if (claim == "conjecture1") {
        report = check_conjecture1(need(v_n, "n"), need(v_k, "k"), options);
      } else if (claim == "conjecture2") {
        report = check_conjecture2(need(v_n, "n"), need(v_s, "s"), need(v_t, "t"), options);
      } else {
        err << "error: unknown claim '" << claim << "'\n";
        return 2;
      }
      out << report.to_text();
      if (!json_target.empty()) {
        if (json_target == "-") {
          out << report.to_json() << '\n';
        } else {
          std::ofstream file(json_target);
          if (!file) {
            err << "error: cannot write " << json_target << '\n';
            return 2;
          }
          file << report.to_json() << '\n';
        }
      }
      return report.holds() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace extremal::cli
