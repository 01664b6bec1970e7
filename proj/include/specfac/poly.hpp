#pragma once
#include "specfac/config.hpp"

namespace specfac {

// x^2 + b x + c
struct Quadratic {
  double b = 0.0, c = 0.0;
  double eval(double x) const { return (x + b) * x + c; }
  double discriminant() const { return b * b - 4.0 * c; }
};

// x^3 + a x^2 + b x + c
struct Cubic {
  double a = 0.0, b = 0.0, c = 0.0;
  double eval(double x) const { return ((x + a) * x + b) * x + c; }
  double deriv(double x) const { return (3.0 * x + 2.0 * a) * x + b; }
};

// Largest real root. Throws std::domain_error if the quadratic has none.
double largest_real_root(const Quadratic& q);

// Largest real root of a monic cubic (always exists), isolated via the
// critical points of the derivative and refined by bisection plus Newton
// polishing to within tol.
double largest_real_root(const Cubic& c, double tol = kRootTol);

// Same, but first tries the bracket [lo, hi]; falls back to the global
// search if the bracket does not contain a sign change.
double largest_real_root_hinted(const Cubic& c, double lo, double hi,
                                double tol = kRootTol);

}  // namespace specfac
