#include "specfac/enumerate.hpp"

#include <cstdint>
#include <mutex>
#include <set>
#include <string>

#include "specfac/canonical.hpp"
#include "specfac/config.hpp"
#include "specfac/errors.hpp"
#include "specfac/graph6.hpp"

namespace specfac {
namespace {

// n <= 6: brute force over edge subsets.
std::set<std::string> brute_connected(int n) {
  std::set<std::string> out;
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  const std::uint64_t limit = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1) edges.push_back(all[k]);
    const Graph g = make_graph(n, edges);
    if (is_connected(g)) out.insert(canonical_label(g));
  }
  return out;
}

// Augment each (n-1)-vertex representative by one new vertex joined to every
// nonempty neighborhood; correct because every connected graph has a vertex
// whose removal keeps it connected.
std::set<std::string> augment_connected(int n, const std::set<std::string>& prev) {
  std::set<std::string> out;
  for (const std::string& label : prev) {
    const Graph parent = graph6_decode(label);
    std::vector<Edge> edges = edge_list(parent);
    const std::size_t base = edges.size();
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      edges.resize(base);
      for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1) edges.push_back({v, n - 1});
      out.insert(canonical_label(make_graph(n, edges)));
    }
  }
  return out;
}

// Sorted canonical labels of all connected graphs on n vertices, cached.
const std::set<std::string>& connected_labels(int n) {
  static std::mutex mu;
  static std::set<std::string> cache[kEnumerationCap + 1];
  static bool ready[kEnumerationCap + 1] = {};
  std::scoped_lock lock(mu);
  for (int k = n <= 6 ? n : 6; k <= n; ++k) {
    if (ready[k]) continue;
    cache[k] = k <= 6 ? brute_connected(k) : augment_connected(k, cache[k - 1]);
    ready[k] = true;
  }
  return cache[n];
}

void check_order(int n) {
  if (n < 1 || n > kEnumerationCap)
    throw cap_error("connected enumeration supports 1.." +
                    std::to_string(kEnumerationCap) + " vertices, got " +
                    std::to_string(n));
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  check_order(n);
  std::vector<Graph> out;
  for (const std::string& label : connected_labels(n)) out.push_back(graph6_decode(label));
  return out;
}

void for_each_connected(int n, const std::function<void(const Graph&)>& fn) {
  check_order(n);
  for (const std::string& label : connected_labels(n)) fn(graph6_decode(label));
}

}  // namespace specfac
