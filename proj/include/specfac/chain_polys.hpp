#pragma once

namespace specfac {

// Closed-form polynomials used by the sign-claim registry.  Each one is tied
// to the block-matrix route by an identity that the test suite checks at
// sample points, so a transcription slip here cannot hide.

// Quadratic link between the hub-family cubic and the one-hub threshold
// cubic: family_cubic(x) - threshold_cubic(x) = -((s-1)/4) * link_quad_odd
// for odd s, and -((s-2)/4) * link_quad_even against the two-hub cubic for
// even s.
double link_quad_odd(double s, double n, double a, double x);
double link_quad_even(double s, double n, double a, double x);

// The link quadratics evaluated at x = n-3 (odd) and x = n-5 (even).
double link_gap_odd(double s, double n, double a);
double link_gap_even(double s, double n, double a);

// The gaps above at the smallest admissible order, n = 5(s+1)/2 and
// n = 5s/2 + 3 respectively.
double link_gap_odd_min_order(double s, double a);
double link_gap_even_min_order(double s, double a);

// Linear factors controlling how the gaps move with n and s.
double odd_aux_linear_n(double s, double n, double a);
double odd_aux_linear_s(double s, double a);
double even_aux_linear_n(double s, double n, double a);
double even_aux_linear_s(double s, double a);

// Hub-family cubic evaluated at x = n-3 (odd s) and x = n-5 (even s),
// written out as polynomials in (s, n, alpha).
double family_value_odd(double s, double n, double a);
double family_value_even(double s, double n, double a);

// Endpoint specializations in s, and the s-derivatives there; smax denotes
// the continuous upper end s = 2n/5 - 1 (odd) or s = 2n/5 - 6/5 (even).
double family_value_odd_s3(double n, double a);
double family_value_odd_smax(double n, double a);
double family_deriv_odd_s3(double n, double a);
double family_deriv_odd_smax(double n, double a);
double family_value_even_s4(double n, double a);
double family_value_even_smax(double n, double a);
double family_deriv_even_s4(double n, double a);
double family_deriv_even_smax(double n, double a);

// Two-hub threshold cubic evaluated at x = n-3.
double second_family_gap(double n, double a);

// Degenerate-order star families: positive value certifies that the largest
// root of the 2x2 quotient quadratic stays below n-3 at the pinned order
// n = s + floor(3s/2) + surplus.
double star_gap_odd1(double s, double a);   // odd s, surplus 1
double star_gap_even1(double s, double a);  // even s, surplus 1
double star_gap_odd2(double s, double a);   // odd s, surplus 2
double star_gap_even2(double s, double a);  // even s, surplus 2

}  // namespace specfac
