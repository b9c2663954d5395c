#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "extremal/counting.hpp"
#include "extremal/covering.hpp"
#include "extremal/enumeration.hpp"
#include "extremal/families.hpp"
#include "extremal/graph.hpp"
#include "extremal/graph6.hpp"
#include "extremal/verify.hpp"

namespace py = pybind11;
using namespace extremal;

namespace {

VertexSet set_from_list(const std::vector<int>& vs) { return vertices_to_set(vs); }

std::vector<int> list_from_set(VertexSet s) { return set_to_vertices(s); }

VerifyOptions options_from_threads(int threads) {
  VerifyOptions o;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact triangle counting, triangle covers and exhaustive extremal-graph checks";
  m.attr("__version__") = "0.1.0";

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", [](const Graph& g, int v) { return list_from_set(g.neighbors(v)); },
           py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
      .def("remove_edge", &Graph::remove_edge, py::arg("u"), py::arg("v"))
      .def("edges", &Graph::edges)
      .def("induced_subgraph",
           [](const Graph& g, const std::vector<int>& s) { return g.induced_subgraph(set_from_list(s)); },
           py::arg("vertices"))
      .def("delete_vertices",
           [](const Graph& g, const std::vector<int>& s) { return g.delete_vertices(set_from_list(s)); },
           py::arg("vertices"))
      .def("edges_between",
           [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
             return g.edges_between(set_from_list(a), set_from_list(b));
           },
           py::arg("a"), py::arg("b"))
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def_static("from_graph6", [](const std::string& text) { return from_graph6(text); },
                  py::arg("text"))
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ", g6='"
           << (g.vertex_count() <= 62 ? to_graph6(g) : std::string("?")) << "')";
        return os.str();
      });

  m.def("are_isomorphic", &are_isomorphic, py::arg("g"), py::arg("h"));

  m.def("count_triangles", &count_triangles, py::arg("g"));
  m.def("count_triangles_oracle", &count_triangles_oracle, py::arg("g"));
  m.def("count_cliques", &count_cliques, py::arg("g"), py::arg("k"));
  m.def("list_cliques",
        [](const Graph& g, int k) {
          std::vector<std::vector<int>> out;
          for (VertexSet s : list_cliques(g, k)) out.push_back(list_from_set(s));
          return out;
        },
        py::arg("g"), py::arg("k"));
  m.def("triangle_profile", [](const Graph& g) {
    const TriangleProfile p = triangle_profile(g);
    py::dict d;
    d["total"] = p.total;
    d["per_vertex"] = p.per_vertex;
    py::dict per_edge;
    for (const auto& [edge, common] : p.per_edge)
      per_edge[py::make_tuple(edge.first, edge.second)] = common;
    d["per_edge"] = per_edge;
    return d;
  });

  py::class_<CoverCertificate>(m, "CoverCertificate")
      .def_readonly("tau", &CoverCertificate::tau)
      .def_property_readonly("cover",
                             [](const CoverCertificate& c) { return list_from_set(c.cover); })
      .def_property_readonly("packing",
                             [](const CoverCertificate& c) {
                               std::vector<std::tuple<int, int, int>> out;
                               for (const Triangle& t : c.packing) out.emplace_back(t.a, t.b, t.c);
                               return out;
                             })
      .def("__repr__", [](const CoverCertificate& c) {
        return "CoverCertificate(tau=" + std::to_string(c.tau) + ")";
      });

  m.def("is_triangle_cover",
        [](const Graph& g, const std::vector<int>& s) { return is_triangle_cover(g, set_from_list(s)); },
        py::arg("g"), py::arg("cover"));
  m.def("tau_triangle", &tau_triangle, py::arg("g"));
  m.def("tau_triangle_oracle", &tau_triangle_oracle, py::arg("g"));
  m.def("tau_at_least", &tau_at_least, py::arg("g"), py::arg("s"));

  m.def("complete_bipartite", &complete_bipartite, py::arg("i"), py::arg("m"));
  m.def("k_minus", &k_minus, py::arg("i"), py::arg("m"));
  m.def("k_t", &k_t, py::arg("i"), py::arg("m"));
  m.def("turan", &turan, py::arg("n"), py::arg("r"));
  m.def("turan_minus", &turan_minus, py::arg("n"), py::arg("k"));
  m.def("turan_sqsubset", &turan_sqsubset, py::arg("n"), py::arg("k"));
  m.def("k_st", &k_st, py::arg("n"), py::arg("s"), py::arg("t"));
  m.def("turan_part_sizes", &turan_part_sizes, py::arg("n"), py::arg("r"));
  m.def("turan_edge_count", &turan_edge_count, py::arg("n"), py::arg("r"));
  m.def("build_family", [](const std::string& spec) { return build(FamilySpec::parse(spec)); },
        py::arg("spec"));
  m.def("predict_family",
        [](const std::string& spec) {
          const Prediction p = predict(FamilySpec::parse(spec));
          py::dict d;
          d["edges"] = p.edges;
          d["triangles"] = p.triangles ? py::cast(*p.triangles) : py::none();
          d["kcliques"] = p.kcliques ? py::make_tuple(p.kcliques->first, p.kcliques->second)
                                     : static_cast<py::object>(py::none());
          d["tau"] = p.tau ? py::cast(*p.tau) : py::none();
          return d;
        },
        py::arg("spec"));

  m.def("enumerate_labeled",
        [](int n, long long m, int shards, int shard, std::optional<long long> min_triangles,
           std::optional<long long> max_triangles, std::optional<int> min_tau,
           std::optional<int> max_tau, const std::optional<py::function>& visitor) {
          EnumerationTask task{n, m, shards, shard, min_triangles, max_triangles, min_tau, max_tau};
          EnumerationStats stats;
          if (visitor) {
            stats = enumerate_labeled(task, [&](const Graph& g) { (*visitor)(g); });
          } else {
            py::gil_scoped_release release;
            stats = enumerate_labeled(task, [](const Graph&) {});
          }
          return py::make_tuple(stats.visited, stats.passed);
        },
        py::arg("n"), py::arg("m"), py::arg("shards") = 1, py::arg("shard") = 0,
        py::arg("min_triangles") = py::none(), py::arg("max_triangles") = py::none(),
        py::arg("min_tau") = py::none(), py::arg("max_tau") = py::none(),
        py::arg("visitor") = py::none());

  m.def("reduce_to_isomorphism_classes", &reduce_to_isomorphism_classes, py::arg("graphs"));

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("claim_id", &VerificationReport::claim_id)
      .def_readonly("params", &VerificationReport::params)
      .def_readonly("space_size", &VerificationReport::space_size)
      .def_readonly("extremal_value", &VerificationReport::extremal_value)
      .def_readonly("witnesses", &VerificationReport::witnesses)
      .def_readonly("counterexamples", &VerificationReport::counterexamples)
      .def_readonly("notes", &VerificationReport::notes)
      .def_readonly("elapsed_ms", &VerificationReport::elapsed_ms)
      .def("holds", &VerificationReport::holds)
      .def("to_json", &VerificationReport::to_json)
      .def("to_text", &VerificationReport::to_text)
      .def("__repr__", [](const VerificationReport& r) {
        return "VerificationReport(claim_id='" + r.claim_id + "', holds=" +
               (r.holds() ? "True" : "False") + ")";
      });

  m.def("check_mantel",
        [](int n, int threads) { return check_mantel(n, options_from_threads(threads)); },
        py::arg("n"), py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("check_erdos",
        [](int n, int t, int threads) { return check_erdos(n, t, options_from_threads(threads)); },
        py::arg("n"), py::arg("t"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("check_lovasz_simonovits_bound",
        [](int n, int t, int threads) {
          return check_lovasz_simonovits_bound(n, t, options_from_threads(threads));
        },
        py::arg("n"), py::arg("t"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("check_turan",
        [](int n, int k, int threads) { return check_turan(n, k, options_from_threads(threads)); },
        py::arg("n"), py::arg("k"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("check_lemma1",
        [](int n, int threads) { return check_lemma1(n, options_from_threads(threads)); },
        py::arg("n"), py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("check_lemma3",
        [](int a_max, int b_max, int threads) {
          return check_lemma3(a_max, b_max, options_from_threads(threads));
        },
        py::arg("a_max") = 60, py::arg("b_max") = 60, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("check_main",
        [](int n, int threads) { return check_main(n, options_from_threads(threads)); },
        py::arg("n"), py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("check_conjecture1",
        [](int n, int k, int threads) {
          return check_conjecture1(n, k, options_from_threads(threads));
        },
        py::arg("n"), py::arg("k"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("check_conjecture2",
        [](int n, int s, int t, int threads) {
          return check_conjecture2(n, s, t, options_from_threads(threads));
        },
        py::arg("n"), py::arg("s"), py::arg("t"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("revalidate", &revalidate, py::arg("report"));
}
