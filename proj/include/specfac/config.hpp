#pragma once

// Central numeric tolerances and size caps. CLI flags / SPECFAC_* environment
// variables override these per invocation; library defaults stay fixed.
namespace specfac {

inline constexpr double kEigTol = 1e-9;          // eigenvalue equality comparisons
inline constexpr double kRootTol = 1e-12;        // polynomial root refinement
inline constexpr double kEquitableTol = 1e-12;   // quotient row-sum deviation
inline constexpr double kInterlaceTol = 1e-9;    // interlacing slack
inline constexpr double kRadiusTolScale = 1e-10; // eigensolve abs error per max(1, ||M||_inf)
inline constexpr double kOrderSlack = 1e-9;      // slack when comparing n against order cutoffs

inline constexpr int kEigenDimCap = 2000;    // dense eigensolve dimension cap
inline constexpr int kCriterionCap = 26;     // exhaustive removal-set search cap
inline constexpr int kFactorSearchCap = 14;  // exact partition search cap
inline constexpr int kBlockSizeCap = 15;     // largest tree-family block tried
inline constexpr int kCanonicalCap = 16;     // canonical form vertex cap
inline constexpr int kEnumerationCap = 9;    // built-in connected enumeration cap
inline constexpr long kSpanningTreeCap = 1000000;  // per-block spanning tree budget

}  // namespace specfac
