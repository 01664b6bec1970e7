#include "specfac/criterion.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "specfac/errors.hpp"

namespace specfac {
namespace {

std::vector<int> mask_to_vertices(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

int isolated_in_complement(const std::vector<std::uint64_t>& adj, std::uint64_t s_mask) {
  int count = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (s_mask >> v & 1) continue;
    if ((adj[v] | s_mask) == s_mask) ++count;  // all neighbors removed
  }
  return count;
}

void check_cap(int n) {
  if (n > kCriterionCap)
    throw cap_error("exhaustive criterion limited to " +
                    std::to_string(kCriterionCap) + " vertices, got " +
                    std::to_string(n));
}

struct IndependentSearch {
  const std::vector<std::uint64_t>& adj;
  int n;
  bool found = false;
  std::uint64_t witness_neighborhood = 0;

  // Grow an independent set I (vertices >= next only), tracking N(I).  A
  // violating I satisfies 2|I| > 3|N(I)|, and since N(I) only grows, any
  // branch whose neighborhood already reaches 2n/5 vertices is dead.
  void grow(int next, std::uint64_t iset, std::uint64_t nbhd, int isize, int nsize) {
    if (found) return;
    if (2 * isize > 3 * nsize) {
      found = true;
      witness_neighborhood = nbhd;
      return;
    }
    if (5 * nsize >= 2 * n) return;
    for (int v = next; v < n; ++v) {
      if (nbhd >> v & 1) continue;
      if (2 * (isize + n - v) <= 3 * nsize) return;  // too few vertices left
      const std::uint64_t grown_nbhd = nbhd | adj[v];
      grow(v + 1, iset | (std::uint64_t{1} << v), grown_nbhd,
           isize + 1, std::popcount(grown_nbhd));
      if (found) return;
    }
  }
};

}  // namespace

CriterionResult has_factor_criterion(const Graph& g) {
  check_cap(g.n);
  const int n = g.n;
  const std::vector<std::uint64_t> adj = adjacency_masks(g);
  const int smax = n == 0 ? 0 : (2 * n - 1) / 5;
  for (int k = 0; k <= smax; ++k) {
    // k-subsets in lexicographic order.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint64_t s_mask = 0;
      for (const int v : pick) s_mask |= std::uint64_t{1} << v;
      const int iso = isolated_in_complement(adj, s_mask);
      if (2 * iso > 3 * k) return {false, pick, iso};
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {true, {}, 0};
}

CriterionResult criterion_via_independent_sets(const Graph& g) {
  check_cap(g.n);
  const std::vector<std::uint64_t> adj = adjacency_masks(g);
  IndependentSearch search{adj, g.n};
  search.grow(0, 0, 0, 0, 0);
  if (!search.found) return {true, {}, 0};
  const std::vector<int> witness = mask_to_vertices(search.witness_neighborhood);
  return {false, witness, isolated_in_complement(adj, search.witness_neighborhood)};
}

}  // namespace specfac
