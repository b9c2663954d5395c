#include "extremal/graph6.hpp"

#include <stdexcept>

namespace extremal {

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6 short form supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((g.row(i) & vertex_bit(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  const int first = static_cast<unsigned char>(text[0]);
  if (first < 63 || first > 125)
    throw std::invalid_argument("graph6: unsupported header byte (only the short form is accepted)");
  const int n = first - 63;
  const long long pair_count = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pair_count + 5) / 6);
  if (text.size() != 1 + body) throw std::invalid_argument("graph6: length does not match the vertex count");

  Graph g(n);
  long long bit_index = 0;
  int i = 0;
  int j = 1;
  for (std::size_t byte = 0; byte < body; ++byte) {
    const int c = static_cast<unsigned char>(text[1 + byte]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside the printable range");
    const int v = c - 63;
    for (int k = 5; k >= 0; --k, ++bit_index) {
      const bool set = (v >> k) & 1;
      if (bit_index >= pair_count) {
        if (set) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (set) g.add_edge_unchecked(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

}  // namespace extremal
