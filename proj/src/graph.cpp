#include "specfac/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace specfac {

Graph make_graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument("duplicate edge");
  }
  return g;
}

long Graph::edge_count() const {
  long twice = 0;
  for (const auto& row : adj) twice += static_cast<long>(row.size());
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& row = adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Graph empty_graph(int n) { return make_graph(n, {}); }

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return make_graph(n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = edge_list(g);
  for (auto [u, v] : edge_list(h)) edges.push_back({u + g.n, v + g.n});
  return make_graph(g.n + h.n, edges);
}

Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = edge_list(disjoint_union(g, h));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < h.n; ++v) edges.push_back({u, g.n + v});
  return make_graph(g.n + h.n, edges);
}

Graph construct_family(int s, int n1, int i) {
  if (s < 0 || n1 < 0 || i < 0) throw std::invalid_argument("negative part size");
  // hub clique 0..s-1, clique part s..s+n1-1, independent part last
  int n = s + n1 + i;
  std::vector<Edge> edges;
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  for (int u = s; u < s + n1; ++u)
    for (int v = u + 1; v < s + n1; ++v) edges.push_back({u, v});
  return make_graph(n, edges);
}

std::vector<std::vector<int>> family_partition(int s, int n1, int i) {
  std::vector<std::vector<int>> parts;
  std::vector<int> ind, clique, hub;
  for (int v = s + n1; v < s + n1 + i; ++v) ind.push_back(v);
  for (int v = s; v < s + n1; ++v) clique.push_back(v);
  for (int v = 0; v < s; ++v) hub.push_back(v);
  if (i > 0) parts.push_back(ind);
  if (n1 > 0) parts.push_back(clique);
  if (s > 0) parts.push_back(hub);
  return parts;
}

int isolated_count(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.n, 0);
  for (int v : removed) gone[v] = 1;
  int count = 0;
  for (int v = 0; v < g.n; ++v) {
    if (gone[v]) continue;
    bool isolated = true;
    for (int u : g.adj[v])
      if (!gone[u]) { isolated = false; break; }
    if (isolated) ++count;
  }
  return count;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
  }
  return visited == g.n;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.n > 64) throw std::invalid_argument("adjacency_masks limited to 64 vertices");
  std::vector<std::uint64_t> masks(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) masks[v] |= std::uint64_t{1} << u;
  return masks;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int u : g.adj[vertices[i]])
      if (index[u] > static_cast<int>(i)) edges.push_back({static_cast<int>(i), index[u]});
  return make_graph(static_cast<int>(vertices.size()), edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : edge_list(g)) edges.push_back({perm[u], perm[v]});
  return make_graph(g.n, edges);
}

std::vector<Edge> edge_list(const Graph& g) {
  std::vector<Edge> edges;
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v])
      if (u > v) edges.push_back({v, u});
  return edges;
}

bool graphs_equal(const Graph& g, const Graph& h) {
  return g.n == h.n && g.adj == h.adj;
}

}  // namespace specfac
