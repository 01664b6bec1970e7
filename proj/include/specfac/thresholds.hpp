#pragma once
#include <vector>

#include "specfac/poly.hpp"

namespace specfac {

inline int floor_3s2(int s) { return (3 * s) / 2; }

// Smallest graph order for which the spectral sufficient condition is stated,
// as a function of alpha: 20 on [0,1/2], 25 on (1/2,5/7], 7/(1-alpha)+3 above.
double min_order(double alpha);

// n >= min_order(alpha), with a small slack so exact boundary orders are
// admitted despite floating-point noise in 7/(1-alpha)+3.
bool order_ok(int n, double alpha);

// Characteristic cubic of the 3-part quotient of K_s v (K_{n-s-f-1} u (f+1)K_1),
// f = floor(3s/2).  Requires s >= 1, alpha in [0,1), n >= s + f + 2.
Cubic hub_family_cubic(int s, int n, double alpha);

// Degenerate orders where the clique part vanishes (n = s + f + surplus,
// surplus in {1,2}): the quotient is 2x2 and the radius solves a quadratic.
Quadratic hub_star_quadratic(int s, int n, double alpha, int surplus);

// hub_family_cubic at s = 1, written out directly.
Cubic threshold_cubic(int n, double alpha);
// hub_family_cubic at s = 2, written out directly.
Cubic second_family_cubic(int n, double alpha);

// Largest roots; brackets follow from the known root locations.
double tau_threshold(int n, double alpha);    // root of threshold_cubic in (n-3, n-1)
double theta_threshold(int n, double alpha);  // root of second_family_cubic in (n-5, n-1)

// Signless-Laplacian variant: 4x^3 - (6n-14)x^2 + (2n^2-7n)x - (n^2-7n+12),
// returned in monic form.
Cubic q_threshold_cubic(int n);
double mu_threshold(int n);

// All three eigenvalues of the 3-part quotient at given (s, n, alpha),
// ascending.  Used to check the middle eigenvalue sits between alpha*s and
// n + (alpha*s - s - floor(3s/2)) - 2.
std::vector<double> quotient_eigenvalues(int s, int n, double alpha);

}  // namespace specfac
