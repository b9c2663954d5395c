#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "extremal/cli.hpp"
#include "extremal/counting.hpp"
#include "extremal/covering.hpp"
#include "extremal/families.hpp"
#include "extremal/graph6.hpp"
#include "test_util.hpp"

using namespace extremal;
using namespace extremal::testing;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen emits graph6") {
  const CliResult r = run_cli({"gen", "kminus:3,3"});
  CHECK(r.code == 0);
  CHECK(r.out == to_graph6(k_minus(3, 3)) + "\n");
  CHECK(from_graph6(r.out.substr(0, r.out.size() - 1)).edge_count() == 10);

  CHECK(run_cli({"gen", "bogus:1"}).code == 2);
  CHECK(run_cli({"gen", "kminus:1,1"}).code == 2);
  CHECK(run_cli({"gen"}).code == 2);
}

TEST_CASE("count from argument and stdin") {
  CHECK(run_cli({"count", "C~"}).out == "4\n");
  CHECK(run_cli({"count", "--cliques", "4", "C~"}).out == "1\n");
  const CliResult multi = run_cli({"count", "-"}, "C~\nC~\n\n");
  CHECK(multi.code == 0);
  CHECK(multi.out == "4\n4\n");
  CHECK(run_cli({"count", "not-a-graph"}).code == 2);
}

TEST_CASE("gen piped into count matches the predictions") {
  for (const char* spec_text :
       {"kbip:5,7", "kminus:4,4", "kt:5,3", "kst:10,2,1", "kst:14,3,2", "turanminus:6,3"}) {
    const FamilySpec spec = FamilySpec::parse(spec_text);
    const Prediction p = predict(spec);
    if (!p.triangles) continue;
    const CliResult gen = run_cli({"gen", spec_text});
    REQUIRE(gen.code == 0);
    const CliResult counted = run_cli({"count", "-"}, gen.out);
    CHECK(counted.out == std::to_string(*p.triangles) + "\n");
  }
}

TEST_CASE("tau output") {
  const CliResult r = run_cli({"tau", to_graph6(k_minus(3, 3))});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 2) == "1 ");
  const CliResult triangle_free = run_cli({"tau", to_graph6(complete_bipartite(3, 3))});
  CHECK(triangle_free.out == "0 -\n");

  // the printed cover must actually cover
  std::istringstream parse(r.out);
  int tau = 0;
  std::string cover_text;
  parse >> tau >> cover_text;
  VertexSet cover = 0;
  std::istringstream cover_stream(cover_text);
  std::string token;
  while (std::getline(cover_stream, token, ',')) cover |= vertex_bit(std::stoi(token));
  CHECK(is_triangle_cover(k_minus(3, 3), cover));
  CHECK(set_size(cover) == tau);
}

TEST_CASE("iso exit codes") {
  const std::string a = to_graph6(k_minus(3, 3));
  const std::string p4 = to_graph6(path_graph(4));
  const std::string star = to_graph6(star_graph(3));
  CHECK(run_cli({"iso", a, a}).code == 0);
  const CliResult differing = run_cli({"iso", p4, star});
  CHECK(differing.code == 1);
  CHECK(differing.out == "non-isomorphic\n");
  CHECK(run_cli({"iso", "junk", a}).code == 2);
}

TEST_CASE("enumerate statistics") {
  const CliResult r = run_cli({"enumerate", "4", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("shard 0 visited 20 passed 20") != std::string::npos);
  CHECK(r.out.find("total visited 20 passed 20") != std::string::npos);

  const CliResult sharded = run_cli({"enumerate", "5", "7", "--shards", "3"});
  CHECK(sharded.out.find("total visited 120") != std::string::npos);

  const CliResult single = run_cli({"enumerate", "5", "7", "--shards", "3", "--shard", "1"});
  CHECK(single.out.find("total visited") != std::string::npos);
  CHECK(single.out.find("shard 1 ") != std::string::npos);

  const CliResult filtered = run_cli({"enumerate", "5", "6", "--min-triangles", "1"});
  CHECK(filtered.out.find("total visited 210") != std::string::npos);

  CHECK(run_cli({"enumerate", "5", "99"}).code == 2);
}

TEST_CASE("verify claims, exit codes and json") {
  const CliResult main5 = run_cli({"verify", "main", "--n", "5"});
  CHECK(main5.code == 0);
  CHECK(main5.out.find("claim: main") != std::string::npos);
  CHECK(main5.out.find("result: HOLDS") != std::string::npos);

  const CliResult json = run_cli({"verify", "erdos", "--n", "5", "--t", "1", "--json", "-"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"claim_id\": \"erdos\"") != std::string::npos);
  CHECK(json.out.find("\"extremal_value\": 2") != std::string::npos);

  // the lemma3 uniqueness remark genuinely fails at one degenerate point
  const CliResult lemma3 = run_cli({"verify", "lemma3", "--a", "4", "--b", "4"});
  CHECK(lemma3.code == 1);
  CHECK(lemma3.out.find("result: COUNTEREXAMPLE") != std::string::npos);

  CHECK(run_cli({"verify", "main"}).code == 2);              // missing --n
  CHECK(run_cli({"verify", "nonsense", "--n", "5"}).code == 2);
  CHECK(run_cli({"verify", "erdos", "--n", "5"}).code == 2);  // missing --t
  CHECK(run_cli({"verify", "main", "--n", "99"}).code == 2);
}

TEST_CASE("help and usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"frobnicate"}).code == 2);
}

TEST_CASE("EXTREMAL_THREADS sets the default worker count") {
  setenv("EXTREMAL_THREADS", "3", 1);
  const CliResult r = run_cli({"verify", "main", "--n", "6"});
  unsetenv("EXTREMAL_THREADS");
  CHECK(r.code == 0);
  CHECK(r.out.find("extremal_value: 4") != std::string::npos);
}
