#include "specfac/graph6.hpp"

#include <stdexcept>

namespace specfac {

namespace {

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  if (g.n > 258047) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  append_order(out, g.n);
  int bit = 5;
  char cur = 0;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) cur |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        bit = 5;
        cur = 0;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

Graph graph6_decode(const std::string& s) {
  for (char c : s)
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: character out of range");
  std::size_t pos = 0;
  long n;
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == '~') throw std::invalid_argument("graph6: unsupported order header");
    n = (long{s[1] - 63} << 12) | (long{s[2] - 63} << 6) | long{s[3] - 63};
    pos = 4;
  }
  long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need) throw std::invalid_argument("graph6: length mismatch");
  std::vector<Edge> edges;
  long index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      int ch = s[pos + static_cast<std::size_t>(index / 6)] - 63;
      if ((ch >> (5 - index % 6)) & 1) edges.push_back({u, v});
    }
  }
  if (bits % 6 != 0) {
    int last = s.back() - 63;
    int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return make_graph(static_cast<int>(n), edges);
}

}  // namespace specfac
