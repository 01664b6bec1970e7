#pragma once
#include <cstdint>
#include <vector>

#include "specfac/report.hpp"

namespace specfac {

// Edge-count bound that forces the factor: C(n-2,2)+2 in general, with the
// two exceptional orders 6 and 8 raised to 9 and 18 respectively.
long F_bound(int n);

// Exhaustive check over all connected graphs of order n: every graph with
// strictly more than F_bound(n) edges satisfies the factor criterion, and
// at the bound at least one graph fails it (sharpness witness recorded).
VerificationReport verify_theorem1(int n);

// Spectral condition at alpha over each order in ns: the threshold-graph
// equality case is checked exactly, every hub family at the same order stays
// at or below the threshold, and `trials` random connected graphs per order
// are swept; any sampled graph whose alpha-radius exceeds the threshold must
// satisfy the factor criterion.
VerificationReport verify_theorem2(double alpha, const std::vector<int>& ns,
                                   long trials, std::uint64_t seed);

// Signless-Laplacian corollary at each order in ns: 2 * mu_threshold(n)
// equals the q-index of the extremal graph, and the defining cubic is four
// times the alpha = 1/2 threshold cubic coefficient-for-coefficient.
VerificationReport verify_corollary3(const std::vector<int>& ns);

// For every connected graph up to max_n: the subset criterion, the
// independent-set criterion, and the explicit factor search agree.
VerificationReport verify_lemma_equivalence(int max_n);

// Monotonicity and normalization of the alpha-radius: rho_alpha(K_n) = n-1,
// and adding an edge strictly increases the radius of a connected graph.
VerificationReport verify_spectral_ordering(long trials, std::uint64_t seed);

// Runs every registered sign claim.
VerificationReport check_sign_claims();

}  // namespace specfac
