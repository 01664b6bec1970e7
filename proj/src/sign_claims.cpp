#include "specfac/sign_claims.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>

#include "specfac/chain_polys.hpp"
#include "specfac/poly.hpp"
#include "specfac/thresholds.hpp"

namespace specfac {

double link_quad_odd(double s, double n, double a, double x) {
  return (4 * a - 6) * x * x +
         (-4 * a * a * n + 2 * a * n + 6 * s + 8 * a + 2) * x +
         4 * a * a * n * n - (12 * a * a - 12 * a + 6) * s * n -
         (20 * a * a - 12 * a + 8) * n + (21 * a * a - 36 * a + 15) * s * s +
         (37 * a * a - 60 * a + 29) * s + 40 * a * a - 60 * a + 32;
}

double link_quad_even(double s, double n, double a, double x) {
  return (4 * a - 6) * x * x +
         (-4 * a * a * n + 2 * a * n + 6 * s + 8 * a + 10) * x +
         4 * a * a * n * n - (12 * a * a - 12 * a + 6) * s * n -
         (36 * a * a - 28 * a + 16) * n + (21 * a * a - 36 * a + 15) * s * s +
         (68 * a * a - 114 * a + 52) * s + 144 * a * a - 236 * a + 112;
}

double link_gap_odd(double s, double n, double a) {
  return (6 * a - 6) * n * n +
         (-12 * s * a * a + 12 * s * a - 8 * a * a - 10 * a + 30) * n +
         (21 * a * a - 36 * a + 15) * s * s + (37 * a * a - 60 * a + 11) * s +
         40 * a * a - 48 * a - 28;
}

double link_gap_even(double s, double n, double a) {
  return (6 * a - 6) * n * n +
         (-12 * s * a * a + 12 * s * a - 16 * a * a - 14 * a + 54) * n +
         (21 * a * a - 36 * a + 15) * s * s + (68 * a * a - 114 * a + 22) * s +
         144 * a * a - 176 * a - 88;
}

double link_gap_odd_min_order(double s, double a) {
  return (-9 * s * s - 13 * s + 20) * a * a +
         (63 * s * s / 2 + 20 * s - 71.0 / 2) * a - 45 * s * s / 2 + 11 * s +
         19.0 / 2;
}

double link_gap_even_min_order(double s, double a) {
  return (-9 * s * s - 8 * s + 96) * a * a +
         (63 * s * s / 2 - 23 * s - 164) * a - 45 * s * s / 2 + 67 * s + 20;
}

double odd_aux_linear_n(double s, double n, double a) {
  return (-4 * a * a + 10 * a - 12) * n - 16 * a + 6 * s + 38;
}

double odd_aux_linear_s(double s, double a) {
  return (-12 * a * a + 42 * a - 30) * s - 8 * a * a + 20 * a;
}

double even_aux_linear_n(double s, double n, double a) {
  return (-4 * a * a + 10 * a - 12) * n - 32 * a + 6 * s + 70;
}

double even_aux_linear_s(double s, double a) {
  return (-12 * a * a + 42 * a - 30) * s - 16 * a * a + 22 * a + 18;
}

double family_value_odd(double s, double n, double a) {
  return 0.75 * (7 * a - 5) * (1 - a) * s * s * s +
         ((3 * a * a - 3 * a) * n - 4 * a * a + 6 * a + 1) * s * s +
         ((1.5 - 1.5 * a) * n * n - (a * a - 5.5 * a + 7.5) * n -
          0.75 * a * a - 3 * a + 9.75) *
             s +
         (1.5 * a - 1.5) * n * n - (4.5 * a - 7.5) * n - 9;
}

double family_value_even(double s, double n, double a) {
  return 0.75 * (7 * a - 5) * (1 - a) * s * s * s +
         ((3 * a * a - 3 * a) * n - 6.5 * a * a + 10.5 * a + 2) * s * s +
         ((1.5 - 1.5 * a) * n * n - (2 * a * a - 9.5 * a + 13.5) * n -
          2 * a * a - 13 * a + 33) *
             s +
         (3 * a - 3) * n * n - (15 * a - 27) * n - 60;
}

double family_value_odd_s3(double n, double a) {
  return (3 - 3 * a) * n * n + (24 * a * a - 15 * a - 15) * n - 180 * a * a +
         288 * a - 72;
}

double family_value_odd_smax(double n, double a) {
  return ((18 * a * a - 63 * a + 45) * n * n * n -
          (115 * a * a - 530 * a + 505) * n * n +
          (75 * a * a - 1025 * a + 1700) * n + 250 * a * a - 1750) /
         125;
}

double family_deriv_odd_s3(double n, double a) {
  return (1.5 - 1.5 * a) * n * n + (17 * a * a - 12.5 * a - 7.5) * n -
         166.5 * a * a + 276 * a - 85.5;
}

double family_deriv_odd_smax(double n, double a) {
  return ((-6 * a * a + 21 * a - 15) * n * n +
          (120 * a * a - 265 * a + 115) * n - 425 * a * a + 600 * a - 175) /
         50;
}

double family_value_even_s4(double n, double a) {
  return (3 - 3 * a) * n * n + (40 * a * a - 25 * a - 27) * n - 448 * a * a +
         692 * a - 136;
}

double family_value_even_smax(double n, double a) {
  return ((18 * a * a - 63 * a + 45) * n * n * n -
          (212 * a * a - 997 * a + 965) * n * n +
          (386 * a * a - 3806 * a + 6000) * n + 264 * a * a + 1896 * a -
          11280) /
         125;
}

double family_deriv_even_s4(double n, double a) {
  return (1.5 - 1.5 * a) * n * n + (22 * a * a - 14.5 * a - 13.5) * n -
         306 * a * a + 503 * a - 131;
}

double family_deriv_even_smax(double n, double a) {
  return ((-6 * a * a + 21 * a - 15) * n * n + (36 * a * a - 41 * a - 55) * n -
          454 * a * a + 34 * a + 600) /
         50;
}

double second_family_gap(double n, double a) {
  return (2 - 2 * a) * n * n + (12 * a * a - 6 * a - 10) * n - 72 * a * a +
         112 * a - 20;
}

double star_gap_odd1(double s, double a) {
  return 9 * (1 - a) * s * s - 4 * (8 - 5 * a) * s + 5 * a + 15;
}

double star_gap_even1(double s, double a) {
  return 9 * (1 - a) * s * s - 2 * (13 - 7 * a) * s + 8 * a + 8;
}

double star_gap_odd2(double s, double a) {
  return 9 * (1 - a) * s * s - 4 * (5 - 2 * a) * s + 9 * a + 3;
}

double star_gap_even2(double s, double a) {
  return 9 * (1 - a) * s * s - 2 * (7 - a) * s + 8 * a;
}

namespace {

constexpr double kFiveSevenths = 5.0 / 7.0;

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < count; ++i)
    out.push_back(lo + (hi - lo) * i / (count - 1));
  return out;
}

// Alpha samples for the regions the piecewise order floor splits at.
std::vector<double> alpha_low_full() { return linspace(0.0, kFiveSevenths, 14); }
std::vector<double> alpha_low_half() { return linspace(0.0, 0.5, 12); }
std::vector<double> alpha_mid() { return linspace(0.5 + 1e-4, kFiveSevenths, 12); }
std::vector<double> alpha_high() { return linspace(kFiveSevenths + 1e-3, 0.995, 14); }
std::vector<double> alpha_all() { return linspace(0.0, 0.98, 15); }

double order_floor(double a, double nmin_s) {
  return std::max(min_order(a), nmin_s);
}

// Integer orders at and above the floor.
std::vector<double> integer_orders(double a, double nmin_s,
                                   std::initializer_list<int> offsets) {
  const double start = std::ceil(order_floor(a, nmin_s) - 1e-9);
  std::vector<double> out;
  for (const int off : offsets) out.push_back(start + off);
  return out;
}

std::vector<double> real_orders(double a, double nmin_s,
                                std::initializer_list<double> offsets) {
  const double start = order_floor(a, nmin_s);
  std::vector<double> out;
  for (const double off : offsets) out.push_back(start + off);
  return out;
}

using Eval = std::function<double(const GridPoint&)>;

SignClaim claim(std::string name, std::string domain, int sign,
                std::vector<GridPoint> grid, Eval eval, bool allow_zero = false,
                double slack = 0.0) {
  SignClaim c;
  c.name = std::move(name);
  c.domain = std::move(domain);
  c.expected_sign = sign;
  c.allow_zero = allow_zero;
  c.slack = slack;
  c.grid = std::move(grid);
  c.eval = std::move(eval);
  return c;
}

// (alpha)-only grids.
std::vector<GridPoint> alpha_grid(const std::vector<double>& alphas, int reps = 10) {
  // Repeat with jitter-free midpoint refinement to pass the 100-point floor.
  std::vector<GridPoint> grid;
  const double lo = alphas.front(), hi = alphas.back();
  for (const double a : alphas) grid.push_back({0, 0, a});
  const int need = reps * static_cast<int>(alphas.size());
  const auto fine = linspace(lo, hi, need);
  for (const double a : fine) grid.push_back({0, 0, a});
  return grid;
}

void odd_chain(std::vector<SignClaim>& out) {
  const auto odd_nmin = [](double s) { return 5 * (s + 1) / 2; };

  // Region: alpha in [0,5/7], odd s >= 3, n >= max(order floor, 5(s+1)/2).
  std::vector<GridPoint> gap_grid;
  std::vector<GridPoint> aux_n_grid;
  for (const double a : alpha_low_full())
    for (const double s : {3.0, 5.0, 7.0, 9.0, 13.0}) {
      for (const double n : real_orders(a, odd_nmin(s), {0, 0.3, 2, 9, 40, 300})) {
        gap_grid.push_back({s, n, a});
        aux_n_grid.push_back({s, n, a});
      }
    }
  out.push_back(claim(
      "odd_gap_negative", "alpha in [0,5/7], odd s >= 3, n above order floor",
      -1, gap_grid,
      [](const GridPoint& g) { return link_gap_odd(g.s, g.n, g.alpha); }));
  out.push_back(claim(
      "odd_aux_n_negative", "alpha in [0,5/7], odd s >= 3, n above order floor",
      -1, aux_n_grid,
      [](const GridPoint& g) { return odd_aux_linear_n(g.s, g.n, g.alpha); }));

  std::vector<GridPoint> aux_s_grid;
  for (const double a : alpha_low_full())
    for (const double s : {3.0, 5.0, 7.0, 9.0, 11.0, 15.0, 25.0, 101.0})
      aux_s_grid.push_back({s, 0, a});
  out.push_back(claim("odd_aux_s_negative", "alpha in [0,5/7], s >= 3", -1,
                      aux_s_grid, [](const GridPoint& g) {
                        return odd_aux_linear_s(g.s, g.alpha);
                      }));

  // Gap at the minimal order: treated as a quadratic in alpha for s >= 5.
  std::vector<GridPoint> min_order_grid;
  for (const double a : alpha_low_full())
    for (const double s : {5.0, 7.0, 9.0, 11.0, 15.0, 21.0, 35.0, 51.0})
      min_order_grid.push_back({s, 0, a});
  out.push_back(claim("odd_gap_min_order_negative",
                      "alpha in [0,5/7], odd s >= 5", -1, min_order_grid,
                      [](const GridPoint& g) {
                        return link_gap_odd_min_order(g.s, g.alpha);
                      }));
  std::vector<GridPoint> vertex_grid;
  for (const double s : linspace(5, 151, 100)) vertex_grid.push_back({s, 0, 0});
  out.push_back(claim(
      "odd_gap_min_order_alpha_vertex_right", "odd s >= 5", 1, vertex_grid,
      [](const GridPoint& g) {
        const double A = -9 * g.s * g.s - 13 * g.s + 20;
        const double B = 63 * g.s * g.s / 2 + 20 * g.s - 71.0 / 2;
        return -B / (2 * A) - kFiveSevenths;
      }));
  out.push_back(claim(
      "odd_gap_min_order_at_corner", "odd s >= 5, alpha = 5/7", -1, vertex_grid,
      [](const GridPoint& g) {
        return -(225 * g.s * g.s - 914 * g.s + 277) / 49.0;
      }));

  // s = 3 is handled through the fixed orders 20 and 25.
  out.push_back(claim("odd_gap_s3_vertex_left", "alpha in [0,5/7], s = 3", -1,
                      alpha_grid(alpha_low_full()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        const double B = -44 * a * a + 26 * a + 30;
                        return -B / (2 * (6 * a - 6)) - 8;
                      }));
  out.push_back(claim("odd_gap_s3_n20", "alpha in [0,1/2], s = 3, n = 20", -1,
                      alpha_grid(alpha_low_half()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return -540 * a * a + 2368 * a - 1660;
                      }));
  out.push_back(claim("odd_gap_s3_n25", "alpha in (1/2,5/7], s = 3, n = 25", -1,
                      alpha_grid(alpha_mid()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return -760 * a * a + 3848 * a - 2860;
                      }));

  // Link quadratic at the one-hub threshold root; the family cubic there.
  std::vector<GridPoint> tau_grid;
  for (const double a : linspace(0.0, kFiveSevenths, 7))
    for (const double s : {3.0, 5.0, 7.0, 9.0, 11.0})
      for (const double n : integer_orders(a, odd_nmin(s), {0, 1, 3, 8, 25}))
        tau_grid.push_back({s, n, a});
  out.push_back(claim(
      "odd_link_at_tau_negative",
      "alpha in [0,5/7], odd s >= 3, integer n above order floor", -1, tau_grid,
      [](const GridPoint& g) {
        const double tau = tau_threshold(static_cast<int>(g.n), g.alpha);
        return link_quad_odd(g.s, g.n, g.alpha, tau);
      }));
  out.push_back(claim(
      "odd_family_cubic_at_tau_positive",
      "alpha in [0,5/7], odd s >= 3, integer n above order floor", 1, tau_grid,
      [](const GridPoint& g) {
        const Cubic c = hub_family_cubic(static_cast<int>(g.s),
                                         static_cast<int>(g.n), g.alpha);
        return c.eval(tau_threshold(static_cast<int>(g.n), g.alpha));
      }));
}

void even_chain(std::vector<SignClaim>& out) {
  const auto even_nmin = [](double s) { return 5 * s / 2 + 3; };

  std::vector<GridPoint> gap_grid;
  std::vector<GridPoint> aux_n_grid;
  for (const double a : alpha_low_full())
    for (const double s : {4.0, 6.0, 8.0, 10.0, 14.0}) {
      for (const double n : real_orders(a, even_nmin(s), {0, 0.3, 2, 9, 40, 300})) {
        gap_grid.push_back({s, n, a});
        aux_n_grid.push_back({s, n, a});
      }
    }
  out.push_back(claim(
      "even_gap_nonpositive", "alpha in [0,5/7], even s >= 4, n above order floor",
      -1, gap_grid,
      [](const GridPoint& g) { return link_gap_even(g.s, g.n, g.alpha); },
      /*allow_zero=*/true, /*slack=*/1e-9));
  out.push_back(claim(
      "even_aux_n_negative", "alpha in [0,5/7], even s >= 4, n above order floor",
      -1, aux_n_grid,
      [](const GridPoint& g) { return even_aux_linear_n(g.s, g.n, g.alpha); }));

  std::vector<GridPoint> aux_s_grid;
  for (const double a : alpha_low_full())
    for (const double s : {10.0, 12.0, 14.0, 18.0, 26.0, 50.0, 102.0, 200.0})
      aux_s_grid.push_back({s, 0, a});
  out.push_back(claim("even_aux_s_negative", "alpha in [0,5/7], s >= 10", -1,
                      aux_s_grid, [](const GridPoint& g) {
                        return even_aux_linear_s(g.s, g.alpha);
                      }));

  std::vector<GridPoint> min_order_grid;
  for (const double a : alpha_low_full())
    for (const double s : {10.0, 12.0, 14.0, 16.0, 20.0, 30.0, 60.0, 100.0})
      min_order_grid.push_back({s, 0, a});
  out.push_back(claim("even_gap_min_order_negative",
                      "alpha in [0,5/7], even s >= 10", -1, min_order_grid,
                      [](const GridPoint& g) {
                        return link_gap_even_min_order(g.s, g.alpha);
                      }));
  std::vector<GridPoint> vertex_grid;
  for (const double s : linspace(10, 160, 100)) vertex_grid.push_back({s, 0, 0});
  out.push_back(claim(
      "even_gap_min_order_alpha_vertex_right", "even s >= 10", 1, vertex_grid,
      [](const GridPoint& g) {
        const double A = -9 * g.s * g.s - 8 * g.s + 96;
        const double B = 63 * g.s * g.s / 2 - 23 * g.s - 164;
        return -B / (2 * A) - kFiveSevenths;
      }));
  out.push_back(claim(
      "even_gap_min_order_at_corner", "even s >= 10, alpha = 5/7", -1,
      vertex_grid, [](const GridPoint& g) {
        return -(225 * g.s * g.s - 2278 * g.s + 2360) / 49.0;
      }));

  // s in {4, 6, 8} handled through the fixed orders 20 and 25.
  const auto axis_claim = [&](const char* name, double s, double cutoff) {
    out.push_back(claim(name, "alpha in [0,5/7]", -1,
                        alpha_grid(alpha_low_full()), [s, cutoff](const GridPoint& g) {
                          const double a = g.alpha;
                          const double B = -12 * s * a * a + 12 * s * a -
                                           16 * a * a - 14 * a + 54;
                          return -B / (2 * (6 * a - 6)) - cutoff;
                        }));
  };
  axis_claim("even_gap_s8_vertex_left", 8, 17);
  axis_claim("even_gap_s6_vertex_left", 6, 15);
  axis_claim("even_gap_s4_vertex_left", 4, 14);

  const auto fixed_quadratic = [&](const char* name, const char* domain,
                                   std::vector<GridPoint> grid, double c2,
                                   double c1, double c0, bool allow_zero) {
    out.push_back(claim(name, domain, -1, std::move(grid),
                        [c2, c1, c0](const GridPoint& g) {
                          return (c2 * g.alpha + c1) * g.alpha + c0;
                        },
                        allow_zero, allow_zero ? 1e-9 : 0.0));
  };
  fixed_quadratic("even_gap_s8_n20", "alpha in [0,1/2], s = 8, n = 20",
                  alpha_grid(alpha_low_half()), -208, 648, -272, true);
  fixed_quadratic("even_gap_s6_n20", "alpha in [0,1/2], s = 6, n = 20",
                  alpha_grid(alpha_low_half()), -452, 1404, -736, false);
  fixed_quadratic("even_gap_s4_n20", "alpha in [0,1/2], s = 4, n = 20",
                  alpha_grid(alpha_low_half()), -528, 1872, -1080, false);
  fixed_quadratic("even_gap_s8_n25", "alpha in (1/2,5/7], s = 8, n = 25",
                  alpha_grid(alpha_mid()), -768, 2408, -1352, false);
  fixed_quadratic("even_gap_s6_n25", "alpha in (1/2,5/7], s = 6, n = 25",
                  alpha_grid(alpha_mid()), -892, 3044, -1816, false);
  fixed_quadratic("even_gap_s4_n25", "alpha in (1/2,5/7], s = 4, n = 25",
                  alpha_grid(alpha_mid()), -848, 3392, -2160, false);

  // Link quadratic at the two-hub threshold root; the family cubic there.
  std::vector<GridPoint> theta_grid;
  for (const double a : linspace(0.0, kFiveSevenths, 7))
    for (const double s : {4.0, 6.0, 8.0, 10.0, 12.0})
      for (const double n : integer_orders(a, even_nmin(s), {0, 1, 3, 8, 25}))
        theta_grid.push_back({s, n, a});
  out.push_back(claim(
      "even_link_at_theta_negative",
      "alpha in [0,5/7], even s >= 4, integer n above order floor", -1,
      theta_grid, [](const GridPoint& g) {
        const double theta = theta_threshold(static_cast<int>(g.n), g.alpha);
        return link_quad_even(g.s, g.n, g.alpha, theta);
      }));
  out.push_back(claim(
      "even_family_cubic_at_theta_positive",
      "alpha in [0,5/7], even s >= 4, integer n above order floor", 1,
      theta_grid, [](const GridPoint& g) {
        const Cubic c = hub_family_cubic(static_cast<int>(g.s),
                                         static_cast<int>(g.n), g.alpha);
        return c.eval(theta_threshold(static_cast<int>(g.n), g.alpha));
      }));
}

void two_hub_chain(std::vector<SignClaim>& out) {
  out.push_back(claim("second_gap_vertex_left_low", "alpha in [0,5/7]", -1,
                      alpha_grid(alpha_low_full()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        const double B = 12 * a * a - 6 * a - 10;
                        return -B / (2 * (2 - 2 * a)) - 8;
                      }));
  out.push_back(claim("second_gap_n20_positive", "alpha in [0,5/7], n = 20", 1,
                      alpha_grid(alpha_low_full()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return (168 * a - 808) * a + 580;
                      }));
  std::vector<GridPoint> low_grid;
  for (const double a : alpha_low_full())
    for (const double n : real_orders(a, 20, {0, 0.5, 2, 7, 30, 200, 1000, 3000}))
      low_grid.push_back({2, n, a});
  out.push_back(claim("second_gap_positive_low",
                      "alpha in [0,5/7], n above order floor", 1, low_grid,
                      [](const GridPoint& g) {
                        return second_family_gap(g.n, g.alpha);
                      }));
  out.push_back(claim("second_gap_vertex_left_high", "alpha in (5/7,1)", -1,
                      alpha_grid(alpha_high()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        const double B = 12 * a * a - 6 * a - 10;
                        return -B / (2 * (2 - 2 * a)) - 7 / (1 - a);
                      }));
  out.push_back(claim("second_gap_boundary_cubic_positive",
                      "alpha in (5/7,1), value scaled by (1-alpha)", 1,
                      alpha_grid(alpha_high()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return ((72 * a - 100) * a + 90) * a + 8;
                      }));
  std::vector<GridPoint> high_grid;
  for (const double a : alpha_high())
    for (const double n : real_orders(a, 0, {0, 0.5, 2, 7, 30, 200, 1000, 3000}))
      high_grid.push_back({2, n, a});
  out.push_back(claim("second_gap_positive_high",
                      "alpha in (5/7,1), n above order floor", 1, high_grid,
                      [](const GridPoint& g) {
                        return second_family_gap(g.n, g.alpha);
                      }));

  // Threshold ordering at integer orders across the whole alpha range.
  std::vector<GridPoint> order_grid;
  for (const double a : alpha_all())
    for (const double n : integer_orders(a, 0, {0, 1, 2, 4, 8, 16, 50, 150}))
      order_grid.push_back({0, n, a});
  out.push_back(claim("theta_below_cut", "alpha in [0,1), integer n above order floor",
                      -1, order_grid, [](const GridPoint& g) {
                        return theta_threshold(static_cast<int>(g.n), g.alpha) -
                               (g.n - 3);
                      }));
  out.push_back(claim("tau_above_cut", "alpha in [0,1), integer n above order floor",
                      1, order_grid, [](const GridPoint& g) {
                        return tau_threshold(static_cast<int>(g.n), g.alpha) -
                               (g.n - 3);
                      }));
}

void high_alpha_odd_chain(std::vector<SignClaim>& out) {
  // alpha in (5/7,1): the family cubic at x = n-3 is positive for every odd
  // hub size in [3, 2n/5 - 1]; shown via endpoint values and s-derivatives.
  std::vector<GridPoint> sn_grid;
  std::vector<GridPoint> n_grid;
  for (const double a : alpha_high()) {
    for (const double n : real_orders(a, 0, {0, 0.5, 2, 7, 20, 100, 400, 2000})) {
      n_grid.push_back({0, n, a});
      for (const double s : linspace(3, 2 * n / 5 - 1, 5)) sn_grid.push_back({s, n, a});
    }
  }
  out.push_back(claim("high_odd_family_positive",
                      "alpha in (5/7,1), s in [3, 2n/5-1], n above order floor",
                      1, sn_grid, [](const GridPoint& g) {
                        return family_value_odd(g.s, g.n, g.alpha);
                      }));
  out.push_back(claim("high_odd_family_s3_positive", "alpha in (5/7,1)", 1,
                      n_grid, [](const GridPoint& g) {
                        return family_value_odd_s3(g.n, g.alpha);
                      }));
  out.push_back(claim("high_odd_family_smax_positive", "alpha in (5/7,1)", 1,
                      n_grid, [](const GridPoint& g) {
                        return family_value_odd_smax(g.n, g.alpha);
                      }));
  out.push_back(claim("high_odd_deriv_s3_positive", "alpha in (5/7,1)", 1,
                      n_grid, [](const GridPoint& g) {
                        return family_deriv_odd_s3(g.n, g.alpha);
                      }));
  out.push_back(claim("high_odd_deriv_smax_negative", "alpha in (5/7,1)", -1,
                      n_grid, [](const GridPoint& g) {
                        return family_deriv_odd_smax(g.n, g.alpha);
                      }));
  out.push_back(claim("high_odd_cubic_leading_positive", "alpha in (5/7,1)", 1,
                      alpha_grid(alpha_high()), [](const GridPoint& g) {
                        return 0.75 * (7 * g.alpha - 5) * (1 - g.alpha);
                      }));
  out.push_back(claim("high_odd_deriv_s3_boundary_positive",
                      "alpha in (5/7,1), boundary order, scaled by 2(1-alpha)",
                      1, alpha_grid(alpha_high()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return ((333 * a - 647) * a + 548) * a - 129;
                      }));
  out.push_back(claim("high_odd_deriv_smax_boundary_negative",
                      "alpha in (5/7,1), boundary order, scaled by 50(1-alpha)",
                      -1, alpha_grid(alpha_high()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return ((425 * a - 185) * a - 786) * a - 105;
                      }));
  out.push_back(claim("high_odd_family_s3_boundary_positive",
                      "alpha in (5/7,1), boundary order, scaled by (1-alpha)",
                      1, alpha_grid(alpha_high()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return ((180 * a - 300) * a + 255) * a - 30;
                      }));
  out.push_back(claim(
      "high_odd_family_smax_boundary_positive",
      "alpha in (5/7,1), boundary order, scaled by 125(1-alpha)^2", 1,
      alpha_grid(alpha_high()), [](const GridPoint& g) {
        const double a = g.alpha;
        return (((250 * a - 1025) * a + 565) * a + 4221) * a + 840;
      }));
}

void high_alpha_even_chain(std::vector<SignClaim>& out) {
  std::vector<GridPoint> sn_grid;
  std::vector<GridPoint> n_grid;
  for (const double a : alpha_high()) {
    for (const double n : real_orders(a, 0, {0, 0.5, 2, 7, 20, 100, 400, 2000})) {
      n_grid.push_back({0, n, a});
      for (const double s : linspace(4, 2 * n / 5 - 1.2, 5))
        sn_grid.push_back({s, n, a});
    }
  }
  out.push_back(claim("high_even_family_positive",
                      "alpha in (5/7,1), s in [4, 2n/5-6/5], n above order floor",
                      1, sn_grid, [](const GridPoint& g) {
                        return family_value_even(g.s, g.n, g.alpha);
                      }));
  out.push_back(claim("high_even_family_s4_positive", "alpha in (5/7,1)", 1,
                      n_grid, [](const GridPoint& g) {
                        return family_value_even_s4(g.n, g.alpha);
                      }));
  out.push_back(claim("high_even_family_smax_positive", "alpha in (5/7,1)", 1,
                      n_grid, [](const GridPoint& g) {
                        return family_value_even_smax(g.n, g.alpha);
                      }));
  out.push_back(claim("high_even_deriv_s4_positive", "alpha in (5/7,1)", 1,
                      n_grid, [](const GridPoint& g) {
                        return family_deriv_even_s4(g.n, g.alpha);
                      }));
  out.push_back(claim("high_even_deriv_smax_negative", "alpha in (5/7,1)", -1,
                      n_grid, [](const GridPoint& g) {
                        return family_deriv_even_smax(g.n, g.alpha);
                      }));
  out.push_back(claim("high_even_deriv_s4_boundary_positive",
                      "alpha in (5/7,1), boundary order, scaled by 2(1-alpha)",
                      1, alpha_grid(alpha_high()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return ((612 * a - 1310) * a + 1065) * a - 304;
                      }));
  out.push_back(claim("high_even_deriv_smax_boundary_negative",
                      "alpha in (5/7,1), boundary order, scaled by 50(1-alpha)",
                      -1, alpha_grid(alpha_high()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return ((454 * a - 236) * a - 559) * a - 520;
                      }));
  out.push_back(claim("high_even_family_s4_boundary_positive",
                      "alpha in (5/7,1), boundary order, scaled by (1-alpha)",
                      1, alpha_grid(alpha_high()), [](const GridPoint& g) {
                        const double a = g.alpha;
                        return ((448 * a - 860) * a + 653) * a - 178;
                      }));
  out.push_back(claim(
      "high_even_family_smax_boundary_positive",
      "alpha in (5/7,1), order floor + 3, scaled by 125(1-alpha)^2", 1,
      alpha_grid(alpha_high()), [](const GridPoint& g) {
        const double a = g.alpha;
        return ((550 * a - 4825) * a + 7496) * a - 2780;
      }));
}

void star_chain(std::vector<SignClaim>& out) {
  struct StarSpec {
    const char* tag;
    int parity;   // 1 odd, 0 even
    int surplus;  // extra isolated vertices beyond floor(3s/2)+1... order pin
    double (*gap)(double, double);
    int smin_low;   // alpha in [0,1/2]
    int smin_mid;   // alpha in (1/2,5/7]
    double vnum_a;  // s-vertex numerator: (vnum_a - vnum_b*alpha)/(9(1-alpha))
    double vnum_b;
    double anchor_low_c0, anchor_low_c1;  // gap at smin_low: c0 + c1*alpha
    double anchor_mid_c0, anchor_mid_c1;
    double bound_c2, bound_c1, bound_c0;  // high-alpha bound quadratic
    double hnum_a, hnum_b;  // high-alpha smin: (hnum_a - hnum_b*alpha)/(5(1-alpha))
  };
  const StarSpec specs[] = {
      {"odd1", 1, 1, star_gap_odd1, 9, 11, 16, 10, 456, -544, 752, -864, -400,
       740, 584, 19, 5},
      {"even1", 0, 1, star_gap_even1, 8, 10, 13, 7, 376, -456, 648, -752, -336,
       484, 776, 18, 4},
      {"odd2", 1, 2, star_gap_odd2, 9, 11, 10, 4, 552, -648, 872, -992, -264,
       212, 976, 17, 3},
      {"even2", 0, 2, star_gap_even2, 8, 10, 7, 1, 464, -552, 760, -872, -184,
       -76, 1184, 16, 2},
  };
  for (const StarSpec& sp : specs) {
    const std::string base = std::string("star_") + sp.tag;
    auto smin = [sp](double a) -> double {
      if (a <= 0.5) return sp.smin_low;
      if (a <= kFiveSevenths) return sp.smin_mid;
      return (sp.hnum_a - sp.hnum_b * a) / (5 * (1 - a));
    };

    std::vector<GridPoint> gap_grid;
    for (const double a : alpha_all())
      for (const double off : {0.0, 0.7, 2.0, 5.0, 11.0, 29.0, 101.0})
        gap_grid.push_back({smin(a) + off, 0, a});
    out.push_back(claim(base + "_gap_positive",
                        "alpha in [0,1), s at or above the admissible floor", 1,
                        gap_grid, [gap = sp.gap](const GridPoint& g) {
                          return gap(g.s, g.alpha);
                        }));

    std::vector<GridPoint> vgrid = alpha_grid(alpha_all());
    out.push_back(claim(base + "_s_vertex_left", "alpha in [0,1)", -1, vgrid,
                        [sp, smin](const GridPoint& g) {
                          const double a = g.alpha;
                          return (sp.vnum_a - sp.vnum_b * a) / (9 * (1 - a)) -
                                 smin(a);
                        }));
    out.push_back(claim(base + "_anchor_low_positive", "alpha in [0,1/2]", 1,
                        alpha_grid(alpha_low_half()), [sp](const GridPoint& g) {
                          return sp.anchor_low_c0 + sp.anchor_low_c1 * g.alpha;
                        }));
    out.push_back(claim(base + "_anchor_mid_positive", "alpha in (1/2,5/7]", 1,
                        alpha_grid(alpha_mid()), [sp](const GridPoint& g) {
                          return sp.anchor_mid_c0 + sp.anchor_mid_c1 * g.alpha;
                        }));
    out.push_back(claim(base + "_anchor_high_positive",
                        "alpha in (5/7,1), scaled by 25(1-alpha)^2", 1,
                        alpha_grid(alpha_high()), [sp](const GridPoint& g) {
                          const double a = g.alpha;
                          return (sp.bound_c2 * a + sp.bound_c1) * a + sp.bound_c0;
                        }));

    // Root route: the 2x2 quotient's largest eigenvalue sits below n-3.
    std::vector<GridPoint> root_grid;
    for (const double a : linspace(0.0, 0.98, 20)) {
      const double floor_s = smin(a);
      for (int off = 0; off < 12; ++off) {
        int s = static_cast<int>(std::ceil(floor_s - 1e-9)) + off;
        if (sp.parity == 1 && s % 2 == 0) ++s;
        if (sp.parity == 0 && s % 2 == 1) ++s;
        const int n = s + floor_3s2(s) + sp.surplus;
        root_grid.push_back({static_cast<double>(s), static_cast<double>(n), a});
      }
    }
    out.push_back(claim(base + "_root_below_cut",
                        "alpha in [0,1), admissible s, pinned order", -1,
                        root_grid, [sp](const GridPoint& g) {
                          const Quadratic q = hub_star_quadratic(
                              static_cast<int>(g.s), static_cast<int>(g.n),
                              g.alpha, sp.surplus);
                          return largest_real_root(q) - (g.n - 3);
                        }));
  }
}

}  // namespace

std::vector<SignClaim> sign_claim_registry() {
  std::vector<SignClaim> out;
  odd_chain(out);
  even_chain(out);
  two_hub_chain(out);
  high_alpha_odd_chain(out);
  high_alpha_even_chain(out);
  star_chain(out);
  return out;
}

SignClaimOutcome run_sign_claim(const SignClaim& c) {
  SignClaimOutcome out;
  out.name = c.name;
  bool first = true;
  for (const GridPoint& gp : c.grid) {
    const double v = c.eval(gp);
    ++out.points;
    const bool ok = c.expected_sign < 0
                        ? (c.allow_zero ? v <= c.slack : v < 0.0)
                        : (c.allow_zero ? v >= -c.slack : v > 0.0);
    if (!ok) ++out.violations;
    if (first || (c.expected_sign < 0 ? v > out.worst : v < out.worst)) {
      out.worst = v;
      out.worst_point = gp;
      first = false;
    }
  }
  return out;
}

}  // namespace specfac
