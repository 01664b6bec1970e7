#pragma once
#include <vector>

#include "specfac/config.hpp"
#include "specfac/graph.hpp"
#include "specfac/matrix.hpp"

namespace specfac {

using VertexPartition = std::vector<std::vector<int>>;

void validate_partition(const VertexPartition& parts, int n);

struct QuotientMatrix {
  int k = 0;
  std::vector<double> b;       // row-major k*k, block-averaged row sums
  std::vector<int> sizes;      // block sizes
  bool equitable = false;      // every vertex row sum matches its block average
  double max_deviation = 0.0;  // largest per-vertex deviation observed

  double& at(int i, int j) { return b[static_cast<std::size_t>(i) * k + j]; }
  double at(int i, int j) const { return b[static_cast<std::size_t>(i) * k + j]; }
};

QuotientMatrix quotient_matrix(const DenseSymMatrix& m, const VertexPartition& parts,
                               double tol = kEquitableTol);

// Spectral radius of the quotient via its symmetrized similar matrix
// S = D^{1/2} B D^{-1/2}, D = diag(block sizes).
double quotient_spectral_radius(const QuotientMatrix& q);

// For an equitable partition the quotient radius equals the full radius.
// Throws std::invalid_argument if the partition is not equitable.
bool quotient_radius_matches(const Graph& g, double alpha, const VertexPartition& parts,
                             double tol = kEigTol);

// Cauchy interlacing of the principal submatrix on `keep` against m.
bool interlace_check(const DenseSymMatrix& m, const std::vector<int>& keep,
                     double slack = kInterlaceTol);

}  // namespace specfac
