#include "specfac/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specfac {
namespace {

// Bisection on a bracket with f(lo) <= 0 <= f(hi) (or the reverse), then a
// few clamped Newton steps to polish.
double refine_root(const Cubic& c, double lo, double hi, double tol) {
  double flo = c.eval(lo);
  if (flo > 0.0) std::swap(lo, hi);
  for (int it = 0; it < 200 && std::abs(hi - lo) > tol * 0.25; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (c.eval(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double d = c.deriv(x);
    if (d == 0.0) break;
    const double step = c.eval(x) / d;
    const double next = x - step;
    const double a = std::min(lo, hi), b = std::max(lo, hi);
    x = std::clamp(next, a, b);
    if (std::abs(step) < tol * 0.01) break;
  }
  return x;
}

}  // namespace

double largest_real_root(const Quadratic& q) {
  const double disc = q.discriminant();
  if (disc < 0.0) throw std::domain_error("quadratic has no real root");
  // Stable form: compute the larger-magnitude root first, the other via c/r.
  const double s = std::sqrt(disc);
  if (q.b == 0.0) return s * 0.5;
  const double r = -0.5 * (q.b + std::copysign(s, q.b));
  if (r == 0.0) return std::max(0.0, -q.b);
  return std::max(r, q.c / r);
}

double largest_real_root(const Cubic& c, double tol) {
  const double bound =
      1.0 + std::max({std::abs(c.a), std::abs(c.b), std::abs(c.c)});
  // Critical points of the derivative 3x^2 + 2a x + b.
  const double cd = c.a * c.a - 3.0 * c.b;
  if (cd > 0.0) {
    const double s = std::sqrt(cd);
    const double xminus = (-c.a - s) / 3.0;
    const double xplus = (-c.a + s) / 3.0;
    if (c.eval(xplus) <= 0.0) return refine_root(c, xplus, bound, tol);
    // Local minimum positive: the unique real root lies left of the local
    // maximum (where the value is at least as large, hence also positive).
    return refine_root(c, -bound, xminus, tol);
  }
  return refine_root(c, -bound, bound, tol);
}

double largest_real_root_hinted(const Cubic& c, double lo, double hi, double tol) {
  if (lo < hi) {
    const double flo = c.eval(lo);
    const double fhi = c.eval(hi);
    if ((flo <= 0.0 && fhi >= 0.0) || (flo >= 0.0 && fhi <= 0.0))
      return refine_root(c, lo, hi, tol);
  }
  return largest_real_root(c, tol);
}

}  // namespace specfac
