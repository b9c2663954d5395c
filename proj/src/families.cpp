#include "extremal/families.hpp"

#include <charconv>
#include <stdexcept>

namespace extremal {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

Graph complete_bipartite(int i, int m) {
  require(i >= 0 && m >= 0, "complete_bipartite: class sizes must be nonnegative");
  Graph g(i + m);
  for (int x = 0; x < i; ++x)
    for (int y = i; y < i + m; ++y) g.add_edge(x, y);
  return g;
}

Graph k_minus(int i, int m) {
  require(i >= 2, "k_minus: the class holding the extra edge needs at least 2 vertices");
  require(m >= 0, "k_minus: class sizes must be nonnegative");
  Graph g = complete_bipartite(i, m);
  g.add_edge(0, 1);
  return g;
}

Graph k_t(int i, int m) {
  require(i >= 3, "k_t: the class holding the path needs at least 3 vertices");
  require(m >= 1, "k_t: the opposite class needs at least 1 vertex");
  Graph g = complete_bipartite(i, m);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.remove_edge(1, i);
  return g;
}

std::vector<int> turan_part_sizes(int n, int r) {
  require(r >= 1 && r <= n, "turan: need 1 <= r <= n");
  std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
  for (int j = 0; j < n % r; ++j) ++sizes[static_cast<std::size_t>(j)];
  return sizes;
}

long long turan_edge_count(int n, int r) {
  long long e = choose2(n);
  for (int s : turan_part_sizes(n, r)) e -= choose2(s);
  return e;
}

Graph turan(int n, int r) {
  const std::vector<int> sizes = turan_part_sizes(n, r);
  Graph g(n);
  int begin = 0;
  for (int s : sizes) {
    const int end = begin + s;
    for (int u = begin; u < end; ++u)
      for (int v = end; v < n; ++v) g.add_edge(u, v);
    begin = end;
  }
  return g;
}

Graph turan_minus(int n, int k) {
  require(k >= 3, "turan_minus: need k >= 3");
  const std::vector<int> sizes = turan_part_sizes(n, k - 1);
  require(sizes[0] >= 2, "turan_minus: V1 needs at least 2 vertices");
  Graph g = turan(n, k - 1);
  g.add_edge(0, 1);
  return g;
}

Graph turan_sqsubset(int n, int k) {
  require(k >= 3, "turan_sqsubset: need k >= 3");
  const std::vector<int> sizes = turan_part_sizes(n, k - 1);
  require(sizes[0] >= 2 && sizes[1] >= 2, "turan_sqsubset: V1 and V2 need at least 2 vertices each");
  Graph g = turan(n, k - 1);
  const int u = sizes[0];  // first vertex of V2
  g.add_edge(0, 1);        // {x, y} in V1
  g.add_edge(u, u + 1);    // {u, v} in V2
  g.remove_edge(u, 0);     // {u, x}
  return g;
}

Graph k_st(int n, int s, int t) {
  require(t > 0 && t < s, "k_st: need 0 < t < s");
  const int half_up = (n + 1) / 2;
  const int half_down = n / 2;
  require(half_up >= 2 * (s - 1), "k_st: V1 is too small to place the matching");
  require(half_down >= 2, "k_st: V2 needs at least 2 vertices");
  Graph g = complete_bipartite(half_up, half_down);
  const int u1 = half_up;
  const int u2 = half_up + 1;
  for (int i = 1; i <= s - 1; ++i) g.add_edge(2 * (i - 1), 2 * (i - 1) + 1);  // {x_i, y_i}
  g.add_edge(u1, u2);
  for (int i = 1; i <= s - t; ++i) g.remove_edge(2 * (i - 1), u1);  // {x_i, u1}
  return g;
}

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::CompleteBipartite: return complete_bipartite(p.at(0), p.at(1));
    case FamilyKind::KMinus: return k_minus(p.at(0), p.at(1));
    case FamilyKind::KT: return k_t(p.at(0), p.at(1));
    case FamilyKind::Turan: return turan(p.at(0), p.at(1));
    case FamilyKind::TuranMinus: return turan_minus(p.at(0), p.at(1));
    case FamilyKind::TuranSqsubset: return turan_sqsubset(p.at(0), p.at(1));
    case FamilyKind::KST: return k_st(p.at(0), p.at(1), p.at(2));
  }
  throw std::invalid_argument("build: unknown family kind");
}

Prediction predict(const FamilySpec& spec) {
  const auto& p = spec.params;
  Prediction out;
  switch (spec.kind) {
    case FamilyKind::CompleteBipartite: {
      require(p.size() == 2 && p[0] >= 0 && p[1] >= 0, "predict: invalid spec");
      out.edges = static_cast<long long>(p[0]) * p[1];
      out.triangles = 0;
      out.tau = 0;
      return out;
    }
    case FamilyKind::KMinus: {
      require(p.size() == 2 && p[0] >= 2 && p[1] >= 0, "predict: invalid spec");
      out.edges = static_cast<long long>(p[0]) * p[1] + 1;
      out.triangles = p[1];  // common neighborhood of the extra edge is Y
      out.tau = p[1] >= 1 ? 1 : 0;
      return out;
    }
    case FamilyKind::KT: {
      require(p.size() == 2 && p[0] >= 3 && p[1] >= 1, "predict: invalid spec");
      out.edges = static_cast<long long>(p[0]) * p[1] + 1;
      out.triangles = 2LL * (p[1] - 1);
      out.tau = p[1] >= 2 ? 1 : 0;  // every triangle meets the shared path vertex
      return out;
    }
    case FamilyKind::Turan: {
      require(p.size() == 2, "predict: invalid spec");
      out.edges = turan_edge_count(p[0], p[1]);
      out.kcliques = {p[1] + 1, 0};
      if (p[1] <= 2) out.triangles = 0;
      return out;
    }
    case FamilyKind::TuranMinus: {
      require(p.size() == 2 && p[1] >= 3, "predict: invalid spec");
      const auto sizes = turan_part_sizes(p[0], p[1] - 1);
      require(sizes[0] >= 2, "predict: invalid spec");
      out.edges = turan_edge_count(p[0], p[1] - 1) + 1;
      long long copies = 1;
      for (std::size_t j = 1; j < sizes.size(); ++j) copies *= sizes[j];
      out.kcliques = {p[1], copies};
      if (p[1] == 3) out.triangles = copies;
      return out;
    }
    case FamilyKind::TuranSqsubset: {
      require(p.size() == 2 && p[1] >= 3, "predict: invalid spec");
      const auto sizes = turan_part_sizes(p[0], p[1] - 1);
      require(sizes[0] >= 2 && sizes[1] >= 2, "predict: invalid spec");
      out.edges = turan_edge_count(p[0], p[1] - 1) + 1;
      long long copies = sizes[0] + sizes[1] - 2;
      for (std::size_t j = 2; j < sizes.size(); ++j) copies *= sizes[j];
      out.kcliques = {p[1], copies};
      if (p[1] == 3) out.triangles = copies;
      return out;
    }
    case FamilyKind::KST: {
      require(p.size() == 3, "predict: invalid spec");
      const int n = p[0], s = p[1], t = p[2];
      require(t > 0 && t < s, "predict: invalid spec");
      const long long half_up = (n + 1) / 2;
      const long long half_down = n / 2;
      require(half_up >= 2 * (s - 1) && half_down >= 2, "predict: invalid spec");
      out.edges = static_cast<long long>(n) * n / 4 + t;
      out.triangles = (s - 1) * half_down + half_up - 2 * (s - t);
      if (half_up >= 2 * (s - 1) + 1 && half_down >= s + 1) out.tau = s;
      return out;
    }
  }
  throw std::invalid_argument("predict: unknown family kind");
}

namespace {

std::vector<int> parse_params(std::string_view text, std::size_t expected) {
  std::vector<int> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("family spec: bad integer parameter");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("family spec: trailing comma");
  }
  if (out.size() != expected) throw std::invalid_argument("family spec: wrong number of parameters");
  return out;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("family spec: expected kind:params");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "kbip") return {FamilyKind::CompleteBipartite, parse_params(rest, 2)};
  if (kind == "kminus") return {FamilyKind::KMinus, parse_params(rest, 2)};
  if (kind == "kt") return {FamilyKind::KT, parse_params(rest, 2)};
  if (kind == "turan") return {FamilyKind::Turan, parse_params(rest, 2)};
  if (kind == "turanminus") return {FamilyKind::TuranMinus, parse_params(rest, 2)};
  if (kind == "turansq") return {FamilyKind::TuranSqsubset, parse_params(rest, 2)};
  if (kind == "kst") return {FamilyKind::KST, parse_params(rest, 3)};
  throw std::invalid_argument("family spec: unknown kind");
}

std::string FamilySpec::to_string() const {
  const char* name = nullptr;
  switch (kind) {
    case FamilyKind::CompleteBipartite: name = "kbip"; break;
    case FamilyKind::KMinus: name = "kminus"; break;
    case FamilyKind::KT: name = "kt"; break;
    case FamilyKind::Turan: name = "turan"; break;
    case FamilyKind::TuranMinus: name = "turanminus"; break;
    case FamilyKind::TuranSqsubset: name = "turansq"; break;
    case FamilyKind::KST: name = "kst"; break;
  }
  std::string out = name;
  out.push_back(':');
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(params[i]);
  }
  return out;
}

}  // namespace extremal
