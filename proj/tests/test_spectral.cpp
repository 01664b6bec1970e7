#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "specfac/chain_polys.hpp"
#include "specfac/config.hpp"
#include "specfac/errors.hpp"
#include "specfac/graph.hpp"
#include "specfac/matrix.hpp"
#include "specfac/poly.hpp"
#include "specfac/quotient.hpp"
#include "specfac/random_graphs.hpp"
#include "specfac/thresholds.hpp"

using namespace specfac;

namespace {

void check_close(double a, double b, double tol) {
  CHECK(std::abs(a - b) <=
        tol * std::max({1.0, std::abs(a), std::abs(b)}));
}

const double kAlphaGrid[] = {0.0, 0.1, 0.25, 0.4, 0.5, 0.6, 5.0 / 7.0, 0.8, 0.93};

// Five-point central difference: exact for polynomials of degree <= 4.
template <typename F>
double stencil_deriv(F f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("alpha_matrix_entries") {
  const Graph g = make_graph(3, {{0, 1}, {1, 2}});
  const DenseSymMatrix m = alpha_matrix(g, 0.25);
  CHECK(m.at(0, 0) == doctest::Approx(0.25));
  CHECK(m.at(1, 1) == doctest::Approx(0.5));
  CHECK(m.at(0, 1) == doctest::Approx(0.75));
  CHECK(m.at(0, 2) == doctest::Approx(0.0));
  const DenseSymMatrix q = signless_laplacian(g);
  const DenseSymMatrix h = alpha_matrix(g, 0.5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(q.at(i, j) == doctest::Approx(2.0 * h.at(i, j)));
  CHECK(q.inf_norm() == doctest::Approx(4.0));
}

TEST_CASE("spectrum_small_closed_forms") {
  const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
  const auto ev = spectrum(alpha_matrix(p3, 0.0));
  REQUIRE(ev.size() == 3);
  check_close(ev[0], -std::sqrt(2.0), 1e-12);
  check_close(ev[1], 0.0, 1e-12);
  check_close(ev[2], std::sqrt(2.0), 1e-12);
  check_close(rho_alpha(complete(10), 0.5), 9.0, 1e-12);
  check_close(rho_alpha(construct_family(2, 0, 4), 0.0),
              (1.0 + std::sqrt(33.0)) / 2.0, 1e-12);
  check_close(rho_alpha(construct_family(2, 0, 5), 0.0),
              (1.0 + std::sqrt(41.0)) / 2.0, 1e-12);
}

TEST_CASE("eigensystem_residuals") {
  std::mt19937_64 rng(31337);
  const Graph g = random_connected_gnp(12, 0.4, rng);
  const DenseSymMatrix m = alpha_matrix(g, 0.3);
  const EigenSystem es = full_eigensystem(m);
  REQUIRE(es.values.size() == 12);
  for (std::size_t k = 0; k + 1 < es.values.size(); ++k)
    CHECK(es.values[k] <= es.values[k + 1]);
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    double norm = 0.0, resid = 0.0;
    for (int i = 0; i < 12; ++i) {
      double mv = 0.0;
      for (int j = 0; j < 12; ++j) mv += m.at(i, j) * es.vectors[k][j];
      resid = std::max(resid, std::abs(mv - es.values[k] * es.vectors[k][i]));
      norm += es.vectors[k][i] * es.vectors[k][i];
    }
    CHECK(resid <= 1e-9);
    check_close(norm, 1.0, 1e-9);
  }
}

TEST_CASE("matrix_guards") {
  CHECK_THROWS_AS(spectral_radius(DenseSymMatrix::zero(0)), std::invalid_argument);
  CHECK_THROWS_AS(spectrum(DenseSymMatrix::zero(kEigenDimCap + 1)), cap_error);
  DenseSymMatrix bad = DenseSymMatrix::zero(2);
  bad.at(0, 1) = bad.at(1, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(spectrum(bad), std::invalid_argument);
}

TEST_CASE("q_index_is_doubled_half_alpha_radius") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 25; ++t) {
    const Graph g = random_connected_gnp(6 + t % 7, 0.5, rng);
    check_close(q_index(g), 2.0 * rho_alpha(g, 0.5), 1e-10);
  }
}

TEST_CASE("quadratic_roots") {
  check_close(largest_real_root(Quadratic{-1.0, -8.0}),
              (1.0 + std::sqrt(33.0)) / 2.0, 1e-14);
  check_close(largest_real_root(Quadratic{-2.0, 1.0}), 1.0, 1e-12);
  check_close(largest_real_root(Quadratic{0.0, -4.0}), 2.0, 1e-14);
  CHECK_THROWS_AS(largest_real_root(Quadratic{0.0, 1.0}), std::domain_error);
}

TEST_CASE("cubic_roots") {
  check_close(largest_real_root(Cubic{-6.0, 11.0, -6.0}), 3.0, 1e-12);
  // triple root: conditioning limits accuracy to roughly the cube root of tol
  check_close(largest_real_root(Cubic{-6.0, 12.0, -8.0}), 2.0, 1e-4);
  check_close(largest_real_root(Cubic{0.0, 1.0, 1.0}),
              -0.6823278038280193, 1e-12);
  check_close(largest_real_root(Cubic{0.0, 0.0, 0.0}), 0.0, 1e-12);
  // bracket without a sign change falls back to the global search
  check_close(largest_real_root_hinted(Cubic{-6.0, 11.0, -6.0}, -10.0, 0.0),
              3.0, 1e-12);
  check_close(largest_real_root_hinted(Cubic{-6.0, 11.0, -6.0}, 2.5, 3.5),
              3.0, 1e-12);
}

TEST_CASE("order_floor") {
  check_close(min_order(0.0), 20.0, 1e-15);
  check_close(min_order(0.5), 20.0, 1e-15);
  check_close(min_order(0.51), 25.0, 1e-15);
  check_close(min_order(5.0 / 7.0), 25.0, 1e-15);
  check_close(min_order(0.75), 31.0, 1e-9);
  CHECK(order_ok(20, 0.5));
  CHECK(!order_ok(19, 0.5));
  CHECK(order_ok(25, 5.0 / 7.0));
  CHECK(order_ok(31, 0.75));
  CHECK(!order_ok(30, 0.75));
  // 7/(1-0.9)+3 lands a hair above 73 in floating point; the slack admits 73
  CHECK(order_ok(73, 0.9));
  CHECK(!order_ok(72, 0.9));
}

TEST_CASE("threshold_values") {
  check_close(threshold_cubic(20, 0.0).a, -16.0, 1e-15);
  check_close(threshold_cubic(20, 0.0).b, -19.0, 1e-15);
  check_close(threshold_cubic(20, 0.0).c, 32.0, 1e-15);
  check_close(tau_threshold(20, 0.0), 17.006573970781834, 1e-12);
  check_close(tau_threshold(20, 0.25), 17.032799809685452, 1e-12);
  check_close(tau_threshold(20, 0.5), 17.064114690477468, 1e-12);
  check_close(theta_threshold(20, 0.0), 15.06834008382733, 1e-12);
  for (const int n : {20, 25, 30})
    for (const double a : kAlphaGrid) {
      const double tau = tau_threshold(n, a);
      CHECK(tau > n - 3);
      CHECK(tau < n - 1);
      const double theta = theta_threshold(n, a);
      CHECK(theta > n - 5);
      CHECK(theta < n - 1);
      if (order_ok(n, a)) CHECK(theta < tau);
    }
}

TEST_CASE("threshold_cubics_match_family_cubic") {
  for (const int n : {10, 15, 20, 25, 31})
    for (const double a : kAlphaGrid) {
      const Cubic c1 = hub_family_cubic(1, n, a);
      const Cubic t = threshold_cubic(n, a);
      check_close(c1.a, t.a, 1e-11);
      check_close(c1.b, t.b, 1e-11);
      check_close(c1.c, t.c, 1e-11);
      const Cubic c2 = hub_family_cubic(2, n, a);
      const Cubic u = second_family_cubic(n, a);
      check_close(c2.a, u.a, 1e-11);
      check_close(c2.b, u.b, 1e-11);
      check_close(c2.c, u.c, 1e-11);
    }
}

TEST_CASE("family_cubic_root_equals_graph_radius") {
  for (const int s : {1, 2, 3, 4, 5})
    for (const int n : {20, 26, 33})
      for (const double a : {0.0, 0.3, 0.5, 0.75}) {
        const int f = floor_3s2(s);
        const int n1 = n - s - f - 1;
        REQUIRE(n1 >= 1);
        const Graph g = construct_family(s, n1, f + 1);
        const double via_root =
            largest_real_root(hub_family_cubic(s, n, a));
        check_close(via_root, rho_alpha(g, a), 1e-9);
      }
}

TEST_CASE("star_quadratic_root_equals_graph_radius") {
  for (const int s : {2, 3, 4, 5, 7})
    for (const int surplus : {1, 2})
      for (const double a : {0.0, 0.3, 0.6, 0.85}) {
        const int n = s + floor_3s2(s) + surplus;
        const Graph g = construct_family(s, 0, n - s);
        check_close(largest_real_root(hub_star_quadratic(s, n, a, surplus)),
                    rho_alpha(g, a), 1e-9);
      }
}

TEST_CASE("signless_laplacian_threshold") {
  const Cubic q20 = q_threshold_cubic(20);
  check_close(4 * q20.a, -(6.0 * 20 - 14.0), 1e-12);
  check_close(4 * q20.b, 2.0 * 400 - 7.0 * 20, 1e-12);
  check_close(4 * q20.c, -(400.0 - 140.0 + 12.0), 1e-12);
  for (const int n : {20, 25, 30}) {
    const Cubic qc = q_threshold_cubic(n);
    const Cubic half = threshold_cubic(n, 0.5);
    check_close(qc.a, half.a, 1e-13);
    check_close(qc.b, half.b, 1e-13);
    check_close(qc.c, half.c, 1e-13);
    check_close(mu_threshold(n), tau_threshold(n, 0.5), 1e-12);
  }
  check_close(q_index(construct_family(1, 17, 2)), 34.128229380955, 1e-9);
  check_close(q_index(construct_family(1, 22, 2)), 44.097212748527, 1e-9);
  check_close(q_index(construct_family(1, 27, 2)), 54.078250215621, 1e-9);
}

TEST_CASE("quotient_equitable_family") {
  for (const int s : {1, 2, 3})
    for (const double a : {0.0, 0.4, 0.7}) {
      const int f = floor_3s2(s);
      const int n = 20;
      const int n1 = n - s - f - 1;
      const Graph g = construct_family(s, n1, f + 1);
      const auto parts = family_partition(s, n1, f + 1);
      const QuotientMatrix q = quotient_matrix(alpha_matrix(g, a), parts);
      CHECK(q.equitable);
      CHECK(q.max_deviation <= kEquitableTol);
      CHECK(quotient_radius_matches(g, a, parts));
      check_close(quotient_spectral_radius(q), rho_alpha(g, a), 1e-9);
    }
}

TEST_CASE("quotient_rejects_uneven_partition") {
  const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const VertexPartition uneven = {{0, 1}, {2, 3}};
  const QuotientMatrix q = quotient_matrix(alpha_matrix(p4, 0.0), uneven);
  CHECK(!q.equitable);
  CHECK_THROWS_AS(quotient_radius_matches(p4, 0.0, uneven), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({{0, 1}, {1, 2}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({{0, 1}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({{0}, {}, {1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({{0, 3}}, 2), std::invalid_argument);
}

TEST_CASE("interlacing_random_submatrices") {
  std::mt19937_64 rng(555);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_connected_gnp(10, 0.5, rng);
    const DenseSymMatrix m = alpha_matrix(g, 0.35);
    std::vector<int> keep;
    for (int v = 0; v < 10; ++v)
      if ((rng() & 1) != 0) keep.push_back(v);
    if (keep.empty()) keep.push_back(0);
    CHECK(interlace_check(m, keep));
  }
}

TEST_CASE("middle_quotient_eigenvalue_bounds") {
  for (const int s : {1, 2, 3, 4})
    for (const int n : {20, 27})
      for (const double a : kAlphaGrid) {
        const auto ev = quotient_eigenvalues(s, n, a);
        REQUIRE(ev.size() == 3);
        CHECK(ev[0] <= ev[1]);
        CHECK(ev[1] <= ev[2]);
        const int f = floor_3s2(s);
        CHECK(ev[1] >= a * s - 1e-9);
        CHECK(ev[1] <= n + (a * s - s - f) - 2 + 1e-9);
        const Graph g = construct_family(s, n - s - f - 1, f + 1);
        check_close(ev[2], rho_alpha(g, a), 1e-9);
      }
}

TEST_CASE("link_quadratic_ties_family_to_threshold") {
  for (const double s : {3.0, 5.0, 7.0, 9.0})
    for (const double n : {25.0, 32.0, 41.0})
      for (const double a : kAlphaGrid)
        for (const double x : {n - 3, n - 1, n + 2, 4.5}) {
          const double lhs = hub_family_cubic(static_cast<int>(s),
                                              static_cast<int>(n), a)
                                 .eval(x) -
                             threshold_cubic(static_cast<int>(n), a).eval(x);
          const double rhs = -((s - 1) / 4.0) * link_quad_odd(s, n, a, x);
          check_close(lhs, rhs, 1e-9);
        }
  for (const double s : {4.0, 6.0, 8.0, 10.0})
    for (const double n : {28.0, 35.0, 44.0})
      for (const double a : kAlphaGrid)
        for (const double x : {n - 5, n - 1, n + 2, 4.5}) {
          const double lhs = hub_family_cubic(static_cast<int>(s),
                                              static_cast<int>(n), a)
                                 .eval(x) -
                             second_family_cubic(static_cast<int>(n), a).eval(x);
          const double rhs = -((s - 2) / 4.0) * link_quad_even(s, n, a, x);
          check_close(lhs, rhs, 1e-9);
        }
}

TEST_CASE("gap_specializations") {
  for (const double s : {3.0, 5.0, 9.0, 13.0})
    for (const double n : {26.0, 34.0, 47.0})
      for (const double a : kAlphaGrid) {
        check_close(link_gap_odd(s, n, a), link_quad_odd(s, n, a, n - 3), 1e-10);
        check_close(link_gap_even(s, n, a), link_quad_even(s, n, a, n - 5), 1e-10);
        check_close(link_gap_odd_min_order(s, a),
                    link_gap_odd(s, 2.5 * (s + 1), a), 1e-10);
        check_close(link_gap_even_min_order(s, a),
                    link_gap_even(s, 2.5 * s + 3, a), 1e-10);
      }
}

TEST_CASE("aux_linears_are_gap_derivatives") {
  for (const double s : {3.0, 6.0, 9.0, 12.0})
    for (const double n : {26.0, 38.0})
      for (const double a : kAlphaGrid) {
        check_close(odd_aux_linear_n(s, n, a),
                    stencil_deriv([&](double x) { return link_quad_odd(s, n, a, x); },
                                  n - 3, 0.5),
                    1e-9);
        check_close(even_aux_linear_n(s, n, a),
                    stencil_deriv([&](double x) { return link_quad_even(s, n, a, x); },
                                  n - 5, 0.5),
                    1e-9);
        check_close(odd_aux_linear_s(s, a),
                    stencil_deriv([&](double m) { return link_gap_odd(s, m, a); },
                                  2.5 * (s + 1), 0.5),
                    1e-9);
        check_close(even_aux_linear_s(s, a),
                    stencil_deriv([&](double m) { return link_gap_even(s, m, a); },
                                  2.5 * s + 3, 0.5),
                    1e-9);
      }
}

TEST_CASE("family_values_at_candidate_roots") {
  for (const int s : {3, 5, 7})
    for (const int n : {26, 34, 47})
      for (const double a : kAlphaGrid)
        check_close(family_value_odd(s, n, a),
                    hub_family_cubic(s, n, a).eval(n - 3.0), 1e-9);
  for (const int s : {4, 6, 8})
    for (const int n : {28, 36, 48})
      for (const double a : kAlphaGrid)
        check_close(family_value_even(s, n, a),
                    hub_family_cubic(s, n, a).eval(n - 5.0), 1e-9);
  for (const int n : {20, 25, 32})
    for (const double a : kAlphaGrid)
      check_close(second_family_gap(n, a),
                  second_family_cubic(n, a).eval(n - 3.0), 1e-10);
}

TEST_CASE("family_value_endpoints") {
  for (const double n : {25.0, 32.5, 41.0})
    for (const double a : kAlphaGrid) {
      check_close(family_value_odd_s3(n, a), family_value_odd(3.0, n, a), 1e-10);
      check_close(family_value_odd_smax(n, a),
                  family_value_odd(0.4 * n - 1.0, n, a), 1e-10);
      check_close(family_value_even_s4(n, a), family_value_even(4.0, n, a), 1e-10);
      check_close(family_value_even_smax(n, a),
                  family_value_even(0.4 * n - 1.2, n, a), 1e-10);
      check_close(family_deriv_odd_s3(n, a),
                  stencil_deriv([&](double s) { return family_value_odd(s, n, a); },
                                3.0, 0.25),
                  1e-9);
      check_close(family_deriv_odd_smax(n, a),
                  stencil_deriv([&](double s) { return family_value_odd(s, n, a); },
                                0.4 * n - 1.0, 0.25),
                  1e-9);
      check_close(family_deriv_even_s4(n, a),
                  stencil_deriv([&](double s) { return family_value_even(s, n, a); },
                                4.0, 0.25),
                  1e-9);
      check_close(family_deriv_even_smax(n, a),
                  stencil_deriv([&](double s) { return family_value_even(s, n, a); },
                                0.4 * n - 1.2, 0.25),
                  1e-9);
    }
}

TEST_CASE("star_gaps_certify_roots_below_cut") {
  // identity: gap = 4 * quadratic(n-3) at the pinned order
  struct Spec {
    double (*gap)(double, double);
    int parity;  // s mod 2
    int surplus;
  };
  const Spec specs[] = {{star_gap_odd1, 1, 1},
                        {star_gap_even1, 0, 1},
                        {star_gap_odd2, 1, 2},
                        {star_gap_even2, 0, 2}};
  for (const Spec& sp : specs)
    for (int s = 8 + sp.parity; s <= 21; s += 2)
      for (const double a : kAlphaGrid) {
        const int n = s + floor_3s2(s) + sp.surplus;
        const double q4 = 4.0 * hub_star_quadratic(s, n, a, sp.surplus).eval(n - 3.0);
        check_close(sp.gap(s, a), q4, 1e-9);
      }
  // anchor rows at the two smallest admissible hub sizes
  for (const double a : kAlphaGrid) {
    check_close(star_gap_odd1(9, a), 456 - 544 * a, 1e-12);
    check_close(star_gap_odd1(11, a), 752 - 864 * a, 1e-12);
    check_close(star_gap_even1(8, a), 376 - 456 * a, 1e-12);
    check_close(star_gap_even1(10, a), 648 - 752 * a, 1e-12);
    check_close(star_gap_odd2(9, a), 552 - 648 * a, 1e-12);
    check_close(star_gap_odd2(11, a), 872 - 992 * a, 1e-12);
    check_close(star_gap_even2(8, a), 464 - 552 * a, 1e-12);
    check_close(star_gap_even2(10, a), 760 - 872 * a, 1e-12);
  }
}

TEST_CASE("family_cubic_domain_guards") {
  CHECK_THROWS_AS(hub_family_cubic(0, 20, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(hub_family_cubic(3, 8, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(hub_star_quadratic(3, 9, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(hub_star_quadratic(3, 8, 0.5, 3), std::invalid_argument);
}
