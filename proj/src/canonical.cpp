#include "specfac/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "specfac/config.hpp"
#include "specfac/errors.hpp"
#include "specfac/graph6.hpp"

namespace specfac {
namespace {

using Mask = std::uint32_t;

// Backtracking canonical labeling: refine an ordered partition by neighbor
// counts, individualize the first non-singleton cell, and keep the
// lexicographically smallest relabeled adjacency matrix over all leaves.
struct Searcher {
  int n = 0;
  std::vector<Mask> adj;
  std::vector<Mask> best_rows;
  std::vector<int> best_perm;
  bool have_best = false;

  void refine(std::vector<Mask>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
        const Mask splitter = cells[si];
        for (std::size_t ti = 0; ti < cells.size() && !changed; ++ti) {
          const Mask target = cells[ti];
          if (std::popcount(target) <= 1) continue;
          std::array<Mask, 17> buckets{};
          Mask rest = target;
          while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            buckets[std::popcount(adj[v] & splitter)] |= Mask{1} << v;
          }
          int used = 0;
          for (const Mask b : buckets)
            if (b) ++used;
          if (used <= 1) continue;
          std::vector<Mask> next;
          next.reserve(cells.size() + used - 1);
          for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k != ti) {
              next.push_back(cells[k]);
              continue;
            }
            for (const Mask b : buckets)
              if (b) next.push_back(b);
          }
          cells = std::move(next);
          changed = true;
        }
      }
    }
  }

  void leaf(const std::vector<Mask>& cells) {
    std::vector<int> perm(n);  // perm[old] = new
    for (std::size_t k = 0; k < cells.size(); ++k)
      perm[std::countr_zero(cells[k])] = static_cast<int>(k);
    std::vector<Mask> rows(n, 0);
    for (int v = 0; v < n; ++v) {
      Mask rest = adj[v];
      Mask row = 0;
      while (rest) {
        row |= Mask{1} << perm[std::countr_zero(rest)];
        rest &= rest - 1;
      }
      rows[perm[v]] = row;
    }
    if (!have_best || rows < best_rows) {
      best_rows = std::move(rows);
      best_perm = std::move(perm);
      have_best = true;
    }
  }

  void descend(std::vector<Mask> cells) {
    refine(cells);
    std::size_t ti = 0;
    while (ti < cells.size() && std::popcount(cells[ti]) == 1) ++ti;
    if (ti == cells.size()) {
      leaf(cells);
      return;
    }
    Mask rest = cells[ti];
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::vector<Mask> next;
      next.reserve(cells.size() + 1);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k != ti) {
          next.push_back(cells[k]);
          continue;
        }
        next.push_back(Mask{1} << v);
        next.push_back(cells[ti] & ~(Mask{1} << v));
      }
      descend(std::move(next));
    }
  }
};

}  // namespace

std::vector<int> canonical_permutation(const Graph& g) {
  if (g.n > kCanonicalCap)
    throw cap_error("canonical form limited to " + std::to_string(kCanonicalCap) +
                    " vertices, got " + std::to_string(g.n));
  if (g.n == 0) return {};
  Searcher s;
  s.n = g.n;
  const std::vector<std::uint64_t> wide = adjacency_masks(g);
  s.adj.resize(g.n);
  for (int v = 0; v < g.n; ++v) s.adj[v] = static_cast<Mask>(wide[v]);
  std::vector<Mask> cells{static_cast<Mask>((std::uint64_t{1} << g.n) - 1)};
  s.descend(std::move(cells));
  return s.best_perm;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_permutation(g)); }

std::string canonical_label(const Graph& g) { return graph6_encode(canonical_graph(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da(a.n), db(b.n);
  for (int v = 0; v < a.n; ++v) da[v] = a.degree(v);
  for (int v = 0; v < b.n; ++v) db[v] = b.degree(v);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_label(a) == canonical_label(b);
}

}  // namespace specfac
