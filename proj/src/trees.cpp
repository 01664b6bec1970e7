#include "specfac/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace specfac {
namespace {

// Centers of a tree via repeated leaf stripping.
std::vector<int> tree_centers(const Graph& g) {
  if (g.n == 1) return {0};
  std::vector<int> deg(g.n);
  std::vector<int> frontier;
  for (int v = 0; v < g.n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) frontier.push_back(v);
  }
  int remaining = g.n;
  std::vector<int> layer = frontier;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (const int v : layer)
      for (const int u : g.adj[v])
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  return layer;
}

std::string encode_rooted(const Graph& g, int v, int parent) {
  std::vector<std::string> parts;
  for (const int u : g.adj[v])
    if (u != parent) parts.push_back(encode_rooted(g, u, v));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const std::string& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace

bool is_tree(const Graph& g) {
  return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

std::string tree_certificate(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("certificate requires a tree");
  std::string best;
  for (const int c : tree_centers(g)) {
    std::string enc = encode_rooted(g, c, -1);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("tree enumeration needs n >= 1");
  // Grow by attaching one leaf everywhere; every tree arises this way.
  std::vector<Graph> level{make_graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& t : level) {
      std::vector<Edge> edges = edge_list(t);
      for (int v = 0; v < t.n; ++v) {
        edges.push_back({v, t.n});
        Graph grown = make_graph(k, edges);
        next.emplace(tree_certificate(grown), std::move(grown));
        edges.pop_back();
      }
    }
    level.clear();
    for (auto& [cert, t] : next) level.push_back(std::move(t));
  }
  return level;
}

std::vector<Graph> generate_13_trees(int max_internal) {
  if (max_internal < 0) throw std::invalid_argument("max_internal must be >= 0");
  std::vector<Graph> out{complete(2)};  // zero internal vertices
  for (int i = 1; i <= max_internal; ++i) {
    for (const Graph& t : enumerate_trees(i)) {
      int maxdeg = 0;
      for (int v = 0; v < t.n; ++v) maxdeg = std::max(maxdeg, t.degree(v));
      if (maxdeg > 3) continue;
      // Pad every vertex up to degree 3 with fresh leaves; the result has
      // all degrees in {1,3} and exactly i degree-3 vertices.
      std::vector<Edge> edges = edge_list(t);
      int next_id = t.n;
      for (int v = 0; v < t.n; ++v)
        for (int k = t.degree(v); k < 3; ++k) edges.push_back({v, next_id++});
      out.push_back(make_graph(next_id, edges));
    }
  }
  return out;
}

Graph expand_to_T3(const Graph& r) {
  if (!is_tree(r) || r.n < 2)
    throw std::invalid_argument("expansion requires a tree on at least 2 vertices");
  const std::vector<Edge> redges = edge_list(r);
  std::vector<int> leaves;
  for (int v = 0; v < r.n; ++v)
    if (r.degree(v) == 1) leaves.push_back(v);
  std::vector<Edge> edges;
  int next_id = r.n;
  for (const Edge& e : redges) {
    edges.push_back({e.first, next_id});
    edges.push_back({e.second, next_id});
    ++next_id;
  }
  for (const int v : leaves) edges.push_back({v, next_id++});
  return make_graph(next_id, edges);
}

bool is_T3_member(const Graph& g) {
  if (g.n < 5 || g.n % 5 != 0 || !is_tree(g)) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) > 3) return false;

  // Every leaf must hang off a degree-2 vertex carrying exactly one leaf.
  std::vector<char> is_leaf(g.n, 0);
  for (int v = 0; v < g.n; ++v) is_leaf[v] = g.degree(v) == 1;
  for (int v = 0; v < g.n; ++v) {
    if (!is_leaf[v]) continue;
    const int u = g.adj[v][0];
    if (g.degree(u) != 2) return false;
    int leaf_neighbors = 0;
    for (const int w : g.adj[u]) leaf_neighbors += is_leaf[w];
    if (leaf_neighbors != 1) return false;
  }

  // Strip the leaves; what remains must be an exact 1-subdivision: every
  // edge joins one degree-2 vertex to one vertex of other degree.
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (!is_leaf[v]) keep.push_back(v);
  const Graph core = induced_subgraph(g, keep);
  for (const Edge& e : edge_list(core)) {
    const bool a2 = core.degree(e.first) == 2;
    const bool b2 = core.degree(e.second) == 2;
    if (a2 == b2) return false;
  }

  // Smooth the degree-2 vertices; the underlying tree must have all degrees
  // in {1, 3}.
  std::vector<int> new_id(core.n, -1);
  int count = 0;
  for (int v = 0; v < core.n; ++v)
    if (core.degree(v) != 2) new_id[v] = count++;
  if (count < 2) return false;
  std::vector<Edge> smooth_edges;
  for (int v = 0; v < core.n; ++v)
    if (core.degree(v) == 2)
      smooth_edges.push_back({new_id[core.adj[v][0]], new_id[core.adj[v][1]]});
  const Graph base = make_graph(count, smooth_edges);
  if (!is_tree(base)) return false;
  for (int v = 0; v < base.n; ++v)
    if (base.degree(v) != 1 && base.degree(v) != 3) return false;
  return true;
}

std::vector<Graph> t3_members_up_to(int max_n) {
  std::vector<Graph> out;
  if (max_n < 5) return out;
  const int max_internal = max_n / 5 - 1;
  for (const Graph& r : generate_13_trees(max_internal)) {
    Graph m = expand_to_T3(r);
    if (m.n <= max_n) out.push_back(std::move(m));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Graph& a, const Graph& b) { return a.n < b.n; });
  return out;
}

}  // namespace specfac
