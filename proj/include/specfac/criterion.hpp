#pragma once
#include <vector>

#include "specfac/config.hpp"
#include "specfac/graph.hpp"

namespace specfac {

struct CriterionResult {
  bool holds = true;
  std::vector<int> witness;  // violating S when holds is false (empty S allowed)
  int isolated = 0;          // isolated vertices of G - S for that witness
};

// Checks i(G - S) <= (3/2)|S| for every S; a violation, if any exists, is
// already witnessed by some S with |S| < 2n/5, so only those are scanned.
// Subsets are visited in ascending size then lexicographic order, making the
// reported witness deterministic.  Throws cap_error above kCriterionCap.
CriterionResult has_factor_criterion(const Graph& g);

// Equivalent form: a violation exists iff some independent set I satisfies
// |I| > (3/2)|N(I)| (take S = N(I)).  Enumerates independent sets by
// backtracking over bitmasks; fast on dense graphs.
CriterionResult criterion_via_independent_sets(const Graph& g);

}  // namespace specfac
