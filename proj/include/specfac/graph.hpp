#pragma once
#include <cstdint>
#include <utility>
#include <vector>

namespace specfac {

// Undirected simple graph on vertices 0..n-1. Adjacency lists are kept sorted.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  long edge_count() const;
  bool has_edge(int u, int v) const;
};

using Edge = std::pair<int, int>;

Graph make_graph(int n, const std::vector<Edge>& edges);
Graph empty_graph(int n);
Graph complete(int n);

// H's vertices are relabeled to sit above G's.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// K_s joined to (K_{n1} together with i isolated vertices).
// Layout: hub clique 0..s-1, clique block s..s+n1-1, independent block last.
Graph construct_family(int s, int n1, int i);

// Blocks of construct_family(s, n1, i) in quotient row order: independent
// block, clique block, hub block; empty blocks are omitted.
std::vector<std::vector<int>> family_partition(int s, int n1, int i);

// Number of isolated vertices of G - S.
int isolated_count(const Graph& g, const std::vector<int>& removed);

bool is_connected(const Graph& g);
std::vector<std::uint64_t> adjacency_masks(const Graph& g);  // requires n <= 64
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // perm[old] = new
std::vector<Edge> edge_list(const Graph& g);
bool graphs_equal(const Graph& a, const Graph& b);  // same labeled graph

}  // namespace specfac
