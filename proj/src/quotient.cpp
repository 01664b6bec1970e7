#include "specfac/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace specfac {

void validate_partition(const VertexPartition& parts, int n) {
  std::vector<char> seen(n, 0);
  for (const auto& block : parts) {
    if (block.empty()) throw std::invalid_argument("partition block is empty");
    for (const int v : block) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
      if (seen[v]) throw std::invalid_argument("partition repeats vertex " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw std::invalid_argument("partition misses vertex " + std::to_string(v));
}

QuotientMatrix quotient_matrix(const DenseSymMatrix& m, const VertexPartition& parts,
                               double tol) {
  validate_partition(parts, m.n);
  QuotientMatrix q;
  q.k = static_cast<int>(parts.size());
  q.b.assign(static_cast<std::size_t>(q.k) * q.k, 0.0);
  q.sizes.resize(q.k);
  for (int i = 0; i < q.k; ++i) q.sizes[i] = static_cast<int>(parts[i].size());

  q.equitable = true;
  for (int i = 0; i < q.k; ++i) {
    for (int j = 0; j < q.k; ++j) {
      // Row sum into block j, averaged over block i; equitable means every
      // vertex of block i attains the average exactly (within tol).
      double total = 0.0;
      for (const int v : parts[i]) {
        double row = 0.0;
        for (const int u : parts[j]) row += m.at(v, u);
        total += row;
      }
      const double avg = total / q.sizes[i];
      q.at(i, j) = avg;
      for (const int v : parts[i]) {
        double row = 0.0;
        for (const int u : parts[j]) row += m.at(v, u);
        const double dev = std::abs(row - avg);
        q.max_deviation = std::max(q.max_deviation, dev);
        if (dev > tol) q.equitable = false;
      }
    }
  }
  return q;
}

double quotient_spectral_radius(const QuotientMatrix& q) {
  DenseSymMatrix s = DenseSymMatrix::zero(q.k);
  for (int i = 0; i < q.k; ++i)
    for (int j = 0; j < q.k; ++j)
      s.at(i, j) = q.at(i, j) * std::sqrt(static_cast<double>(q.sizes[i]) / q.sizes[j]);
  // Symmetrization is exact in exact arithmetic; collapse rounding noise so
  // the self-adjoint solver sees a symmetric matrix.
  for (int i = 0; i < q.k; ++i)
    for (int j = i + 1; j < q.k; ++j) {
      const double v = 0.5 * (s.at(i, j) + s.at(j, i));
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  return spectral_radius(s);
}

bool quotient_radius_matches(const Graph& g, double alpha, const VertexPartition& parts,
                             double tol) {
  const DenseSymMatrix m = alpha_matrix(g, alpha);
  const QuotientMatrix q = quotient_matrix(m, parts);
  if (!q.equitable)
    throw std::invalid_argument("partition is not equitable (max deviation " +
                                std::to_string(q.max_deviation) + ")");
  return std::abs(quotient_spectral_radius(q) - spectral_radius(m)) <= tol;
}

bool interlace_check(const DenseSymMatrix& m, const std::vector<int>& keep,
                     double slack) {
  for (const int v : keep)
    if (v < 0 || v >= m.n) throw std::invalid_argument("interlace index out of range");
  DenseSymMatrix sub = DenseSymMatrix::zero(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(keep[i], keep[j]);
  const std::vector<double> full = spectrum(m);
  const std::vector<double> part = spectrum(sub);
  const int n = m.n;
  const int k = sub.n;
  for (int i = 0; i < k; ++i) {
    if (part[i] < full[i] - slack) return false;
    if (part[i] > full[i + n - k] + slack) return false;
  }
  return true;
}

}  // namespace specfac
