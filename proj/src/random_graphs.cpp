#include "specfac/random_graphs.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace specfac {

Graph random_connected_gnp(int n, double p, std::mt19937_64& rng, int max_attempts) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    Graph g = make_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("no connected sample after " +
                           std::to_string(max_attempts) + " attempts");
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (n == 1) return make_graph(1, {});
  if (n == 2) return make_graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  std::vector<int> degree(n, 1);
  for (int& x : seq) {
    x = pick(rng);
    ++degree[x];
  }
  // Decode: repeatedly join the smallest remaining leaf to the next code
  // value, then pair up the last two vertices.
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (const int x : seq) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, x});
    if (--degree[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  edges.push_back({a, b});
  return make_graph(n, edges);
}

}  // namespace specfac
