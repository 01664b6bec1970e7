#pragma once
#include <cstddef>
#include <vector>

#include "specfac/graph.hpp"

namespace specfac {

struct DenseSymMatrix {
  int n = 0;
  std::vector<double> a;  // row-major n*n

  static DenseSymMatrix zero(int n) { return {n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)}; }
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  double inf_norm() const;
};

// alpha*D + (1-alpha)*A for alpha in [0,1).
DenseSymMatrix alpha_matrix(const Graph& g, double alpha);
// D + A.
DenseSymMatrix signless_laplacian(const Graph& g);

// Full spectrum, ascending. Dimension cap and finite-entry checks applied.
std::vector<double> spectrum(const DenseSymMatrix& m);

struct EigenSystem {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};
EigenSystem full_eigensystem(const DenseSymMatrix& m);

// Largest eigenvalue (Perron value for entrywise-nonnegative matrices).
double spectral_radius(const DenseSymMatrix& m);
double rho_alpha(const Graph& g, double alpha);
double q_index(const Graph& g);  // signless Laplacian spectral radius

}  // namespace specfac
