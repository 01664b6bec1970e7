#include "specfac/factor_search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "specfac/errors.hpp"
#include "specfac/trees.hpp"

namespace specfac {
namespace {

using Mask = std::uint64_t;

std::vector<int> mask_to_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Spanning tree enumeration by include/exclude branching over the edge list.
// An edge joining two already-connected vertices is forced out; excluding an
// edge is only tried if the remaining edges can still connect everything, so
// every branch taken yields at least one tree and the emitted-tree cap also
// caps the total work.
struct TreeEnumerator {
  int k = 0;
  std::vector<Edge> edges;
  long cap = 0;
  const std::function<bool(const Graph&)>* fn = nullptr;
  SpanningTreeScan scan;

  static int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  bool connects_rest(std::vector<int> parent, std::size_t from) const {
    for (std::size_t i = from; i < edges.size(); ++i) {
      const int a = find_root(parent, edges[i].first);
      const int b = find_root(parent, edges[i].second);
      if (a != b) parent[a] = b;
    }
    const int r = find_root(parent, 0);
    for (int v = 1; v < k; ++v)
      if (find_root(parent, v) != r) return false;
    return true;
  }

  // Returns true when enumeration should stop (accepted or capped).
  bool run(std::size_t idx, int chosen_count, std::vector<Edge>& chosen,
           std::vector<int>& parent) {
    if (chosen_count == k - 1) {
      if (scan.count >= cap) {
        scan.capped = true;
        return true;
      }
      ++scan.count;
      if ((*fn)(make_graph(k, chosen))) {
        scan.stopped = true;
        return true;
      }
      return false;
    }
    if (idx == edges.size()) return false;
    const int a = find_root(parent, edges[idx].first);
    const int b = find_root(parent, edges[idx].second);
    if (a == b) return run(idx + 1, chosen_count, chosen, parent);
    std::vector<int> merged = parent;
    merged[a] = b;
    chosen.push_back(edges[idx]);
    if (run(idx + 1, chosen_count + 1, chosen, merged)) return true;
    chosen.pop_back();
    if (!connects_rest(parent, idx + 1)) return false;
    return run(idx + 1, chosen_count, chosen, parent);
  }
};

enum class Outcome { kSuccess, kFail, kFailCapped };

struct Searcher {
  const Graph& g;
  std::vector<Mask> adj;
  int block_cap;
  long tree_cap;
  std::vector<signed char> memo;  // -1 unknown, 0 fail, 1 fail behind a cap
  std::vector<FactorBlock> blocks;

  // Path-through-all-vertices search with vertex order recovery.
  bool try_paths(const Graph& h, std::vector<int>& path, std::vector<char>& used,
                 std::vector<int>& order) const {
    if (static_cast<int>(path.size()) == h.n) {
      order = path;
      return true;
    }
    for (int v = 0; v < h.n; ++v) {
      if (used[v]) continue;
      if (!path.empty() && !h.has_edge(path.back(), v)) continue;
      used[v] = 1;
      path.push_back(v);
      if (try_paths(h, path, used, order)) return true;
      path.pop_back();
      used[v] = 0;
    }
    return false;
  }

  // Try one candidate block on the vertices of `sub`; on success recurse on
  // the rest.  Returns kSuccess and leaves the block pushed, or a failure
  // kind (kFailCapped when a tree scan gave up before deciding).
  Outcome try_block(Mask rem, Mask sub) {
    const std::vector<int> verts = mask_to_vertices(sub);
    const int size = static_cast<int>(verts.size());
    FactorBlock block;
    block.vertices = verts;
    if (size == 2) {
      block.kind = BlockKind::P2;
      block.edges = {{verts[0], verts[1]}};
    } else if (size == 3) {
      if (!g.has_edge(verts[0], verts[1]) || !g.has_edge(verts[0], verts[2]) ||
          !g.has_edge(verts[1], verts[2]))
        return Outcome::kFail;
      block.kind = BlockKind::C3;
      block.edges = {{verts[0], verts[1]}, {verts[0], verts[2]}, {verts[1], verts[2]}};
    } else if (size == 5) {
      const Graph sub_graph = induced_subgraph(g, verts);
      std::vector<int> order;
      std::vector<int> path;
      std::vector<char> used(5, 0);
      if (!try_paths(sub_graph, path, used, order)) return Outcome::kFail;
      block.kind = BlockKind::P5;
      for (int i = 0; i + 1 < 5; ++i) {
        const int u = verts[order[i]], v = verts[order[i + 1]];
        block.edges.push_back({std::min(u, v), std::max(u, v)});
      }
    } else {
      Graph member;
      const SpanningTreeScan scan = scan_spanning_trees(
          g, verts, tree_cap, [&member](const Graph& t) {
            if (!is_T3_member(t)) return false;
            member = t;
            return true;
          });
      if (!scan.stopped) return scan.capped ? Outcome::kFailCapped : Outcome::kFail;
      block.kind = BlockKind::T3;
      for (const Edge& e : edge_list(member)) {
        const int u = verts[e.first], v = verts[e.second];
        block.edges.push_back({std::min(u, v), std::max(u, v)});
      }
    }
    std::sort(block.edges.begin(), block.edges.end());
    const Outcome rest = cover(rem & ~sub);
    if (rest == Outcome::kSuccess) {
      blocks.push_back(std::move(block));
      return Outcome::kSuccess;
    }
    return rest;
  }

  // Enumerate connected subsets of `rem` of the wanted size containing the
  // pivot; banned vertices were offered to an earlier sibling branch.
  Outcome extend(Mask rem, Mask cur, Mask banned, int want, bool& any_capped) {
    if (std::popcount(cur) == want) {
      const Outcome out = try_block(rem, cur);
      if (out == Outcome::kSuccess) return out;
      if (out == Outcome::kFailCapped) any_capped = true;
      return Outcome::kFail;
    }
    Mask frontier = 0;
    Mask scan_cur = cur;
    while (scan_cur) {
      frontier |= adj[std::countr_zero(scan_cur)];
      scan_cur &= scan_cur - 1;
    }
    frontier &= rem & ~cur & ~banned;
    Mask local_banned = banned;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Outcome out =
          extend(rem, cur | (Mask{1} << v), local_banned, want, any_capped);
      if (out == Outcome::kSuccess) return out;
      local_banned |= Mask{1} << v;
    }
    return Outcome::kFail;
  }

  Outcome cover(Mask rem) {
    if (rem == 0) return Outcome::kSuccess;
    if (memo[rem] >= 0) return memo[rem] == 1 ? Outcome::kFailCapped : Outcome::kFail;
    const int pivot = std::countr_zero(rem);
    const int rem_size = std::popcount(rem);
    bool any_capped = false;
    for (const int size : {2, 3, 5, 10, 15}) {
      if (size > block_cap || size > rem_size) continue;
      const Outcome out =
          extend(rem, Mask{1} << pivot, 0, size, any_capped);
      if (out == Outcome::kSuccess) return out;
    }
    memo[rem] = any_capped ? 1 : 0;
    return any_capped ? Outcome::kFailCapped : Outcome::kFail;
  }
};

}  // namespace

const char* block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::P2: return "P2";
    case BlockKind::C3: return "C3";
    case BlockKind::P5: return "P5";
    case BlockKind::T3: return "T3";
  }
  return "?";
}

SpanningTreeScan scan_spanning_trees(const Graph& g, const std::vector<int>& vertices,
                                     long cap,
                                     const std::function<bool(const Graph&)>& fn) {
  TreeEnumerator te;
  te.k = static_cast<int>(vertices.size());
  Graph sub = induced_subgraph(g, vertices);
  te.edges = edge_list(sub);
  te.cap = cap;
  te.fn = &fn;
  if (te.k == 0 || !is_connected(sub)) return te.scan;
  if (te.k == 1) {
    // Single vertex: its spanning tree is the trivial one-vertex graph.
    if (te.scan.count < cap) {
      ++te.scan.count;
      te.scan.stopped = fn(make_graph(1, {}));
    } else {
      te.scan.capped = true;
    }
    return te.scan;
  }
  std::vector<Edge> chosen;
  std::vector<int> parent(te.k);
  std::iota(parent.begin(), parent.end(), 0);
  te.run(0, 0, chosen, parent);
  return te.scan;
}

FactorSearchResult find_factor(const Graph& g, int max_n, int block_cap, long tree_cap) {
  if (g.n > max_n)
    throw cap_error("exact factor search limited to " + std::to_string(max_n) +
                    " vertices, got " + std::to_string(g.n));
  FactorSearchResult result;
  if (g.n == 0) {
    result.found = true;
    return result;
  }
  Searcher searcher{g, adjacency_masks(g), block_cap, tree_cap,
                    std::vector<signed char>(std::size_t{1} << g.n, -1), {}};
  const Mask full = (Mask{1} << g.n) - 1;
  const Outcome out = searcher.cover(full);
  if (out == Outcome::kSuccess) {
    result.found = true;
    std::reverse(searcher.blocks.begin(), searcher.blocks.end());
    result.certificate.blocks = std::move(searcher.blocks);
    return result;
  }
  if (out == Outcome::kFailCapped)
    throw inconclusive_error(
        "no factor found, but a spanning tree scan hit its cap of " +
        std::to_string(tree_cap) + " trees");
  return result;
}

bool verify_certificate(const Graph& g, const FactorCertificate& cert,
                        std::string* reason) {
  const auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  std::vector<char> covered(g.n, 0);
  int covered_count = 0;
  for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
    const FactorBlock& block = cert.blocks[b];
    const std::string tag = "block " + std::to_string(b) + " (" +
                            block_kind_name(block.kind) + ")";
    for (const int v : block.vertices) {
      if (v < 0 || v >= g.n) return fail(tag + " references vertex out of range");
      if (covered[v]) return fail(tag + " re-covers vertex " + std::to_string(v));
      covered[v] = 1;
      ++covered_count;
    }
    std::vector<int> verts = block.vertices;
    std::sort(verts.begin(), verts.end());
    std::vector<int> local(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<Edge> local_edges;
    for (const Edge& e : block.edges) {
      if (!g.has_edge(e.first, e.second))
        return fail(tag + " uses a non-edge of the graph");
      if (local[e.first] < 0 || local[e.second] < 0)
        return fail(tag + " uses an edge leaving the block");
      local_edges.push_back({local[e.first], local[e.second]});
    }
    Graph h;
    try {
      h = make_graph(static_cast<int>(verts.size()), local_edges);
    } catch (const std::exception&) {
      return fail(tag + " repeats an edge");
    }
    switch (block.kind) {
      case BlockKind::P2:
        if (h.n != 2 || h.edge_count() != 1) return fail(tag + " is not a single edge");
        break;
      case BlockKind::C3:
        if (h.n != 3 || h.edge_count() != 3) return fail(tag + " is not a triangle");
        break;
      case BlockKind::P5: {
        if (h.n != 5 || h.edge_count() != 4 || !is_connected(h))
          return fail(tag + " is not a path on five vertices");
        int deg1 = 0;
        for (int v = 0; v < h.n; ++v) {
          if (h.degree(v) > 2) return fail(tag + " is not a path on five vertices");
          deg1 += h.degree(v) == 1;
        }
        if (deg1 != 2) return fail(tag + " is not a path on five vertices");
        break;
      }
      case BlockKind::T3:
        if (!is_T3_member(h)) return fail(tag + " is not in the expanded tree family");
        break;
    }
  }
  if (covered_count != g.n) return fail("blocks do not cover every vertex");
  if (reason) reason->clear();
  return true;
}

}  // namespace specfac
