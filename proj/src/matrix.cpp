#include "specfac/matrix.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "specfac/config.hpp"
#include "specfac/errors.hpp"

namespace specfac {
namespace {

Eigen::MatrixXd to_eigen(const DenseSymMatrix& m) {
  if (m.n < 0 || m.a.size() != static_cast<std::size_t>(m.n) * m.n)
    throw std::invalid_argument("matrix storage does not match its order");
  if (m.n > kEigenDimCap)
    throw cap_error("dense eigensolve limited to order " +
                    std::to_string(kEigenDimCap) + ", got " + std::to_string(m.n));
  Eigen::MatrixXd e(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const double v = m.at(i, j);
      if (!std::isfinite(v)) throw std::invalid_argument("matrix entry is not finite");
      e(i, j) = v;
    }
  return e;
}

}  // namespace

double DenseSymMatrix::inf_norm() const {
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(at(i, j));
    best = std::max(best, row);
  }
  return best;
}

DenseSymMatrix alpha_matrix(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1)");
  DenseSymMatrix m = DenseSymMatrix::zero(g.n);
  for (int v = 0; v < g.n; ++v) {
    m.at(v, v) = alpha * g.degree(v);
    for (const int u : g.adj[v]) m.at(v, u) = 1.0 - alpha;
  }
  return m;
}

DenseSymMatrix signless_laplacian(const Graph& g) {
  DenseSymMatrix m = DenseSymMatrix::zero(g.n);
  for (int v = 0; v < g.n; ++v) {
    m.at(v, v) = g.degree(v);
    for (const int u : g.adj[v]) m.at(v, u) = 1.0;
  }
  return m;
}

std::vector<double> spectrum(const DenseSymMatrix& m) {
  if (m.n == 0) return {};
  const Eigen::MatrixXd e = to_eigen(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  std::vector<double> out(m.n);
  for (int i = 0; i < m.n; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

EigenSystem full_eigensystem(const DenseSymMatrix& m) {
  EigenSystem sys;
  if (m.n == 0) return sys;
  const Eigen::MatrixXd e = to_eigen(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  sys.values.resize(m.n);
  sys.vectors.assign(m.n, std::vector<double>(m.n));
  for (int k = 0; k < m.n; ++k) {
    sys.values[k] = solver.eigenvalues()(k);
    for (int i = 0; i < m.n; ++i) sys.vectors[k][i] = solver.eigenvectors()(i, k);
  }
  return sys;
}

double spectral_radius(const DenseSymMatrix& m) {
  if (m.n == 0) throw std::invalid_argument("spectral radius of an empty matrix");
  return spectrum(m).back();
}

double rho_alpha(const Graph& g, double alpha) {
  return spectral_radius(alpha_matrix(g, alpha));
}

double q_index(const Graph& g) { return spectral_radius(signless_laplacian(g)); }

}  // namespace specfac
