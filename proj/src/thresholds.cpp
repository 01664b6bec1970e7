#include "specfac/thresholds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specfac/config.hpp"
#include "specfac/matrix.hpp"

namespace specfac {
namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1)");
}

// 3x3 block-averaged matrix of K_s v (K_{n1} u i K_1) under alpha*D+(1-alpha)*A,
// rows/cols ordered independent part, clique part, hub.
struct HubBlocks {
  double b[3][3];
  int sizes[3];
};

HubBlocks hub_blocks(int s, int n, double alpha) {
  const int f = floor_3s2(s);
  const int i = f + 1;
  const int n1 = n - s - f - 1;
  HubBlocks h{};
  h.sizes[0] = i;
  h.sizes[1] = n1;
  h.sizes[2] = s;
  const double ca = 1.0 - alpha;
  h.b[0][0] = alpha * s;
  h.b[0][1] = 0.0;
  h.b[0][2] = ca * s;
  h.b[1][0] = 0.0;
  h.b[1][1] = n1 - 1 + alpha * s;
  h.b[1][2] = ca * s;
  h.b[2][0] = ca * i;
  h.b[2][1] = ca * n1;
  h.b[2][2] = alpha * n - alpha * s + s - 1;
  return h;
}

}  // namespace

double min_order(double alpha) {
  check_alpha(alpha);
  if (alpha <= 0.5) return 20.0;
  if (alpha <= 5.0 / 7.0) return 25.0;
  return 7.0 / (1.0 - alpha) + 3.0;
}

bool order_ok(int n, double alpha) { return n >= min_order(alpha) - kOrderSlack; }

Cubic hub_family_cubic(int s, int n, double alpha) {
  check_alpha(alpha);
  if (s < 1) throw std::invalid_argument("hub size must be at least 1");
  if (n < s + floor_3s2(s) + 2)
    throw std::invalid_argument("order " + std::to_string(n) +
                                " leaves no clique part for hub size " +
                                std::to_string(s));
  const HubBlocks h = hub_blocks(s, n, alpha);
  const double tr = h.b[0][0] + h.b[1][1] + h.b[2][2];
  const double minors = h.b[0][0] * h.b[1][1] +
                        (h.b[0][0] * h.b[2][2] - h.b[0][2] * h.b[2][0]) +
                        (h.b[1][1] * h.b[2][2] - h.b[1][2] * h.b[2][1]);
  const double det = h.b[0][0] * (h.b[1][1] * h.b[2][2] - h.b[1][2] * h.b[2][1]) -
                     h.b[0][2] * h.b[1][1] * h.b[2][0];
  return Cubic{-tr, minors, -det};
}

Quadratic hub_star_quadratic(int s, int n, double alpha, int surplus) {
  check_alpha(alpha);
  if (s < 1) throw std::invalid_argument("hub size must be at least 1");
  if (surplus != 1 && surplus != 2)
    throw std::invalid_argument("surplus must be 1 or 2");
  if (n != s + floor_3s2(s) + surplus)
    throw std::invalid_argument("order does not match hub size and surplus");
  const int i = n - s;
  const double ca = 1.0 - alpha;
  const double tr = alpha * n + s - 1;
  const double det =
      alpha * s * (alpha * n - alpha * s + s - 1) - ca * ca * s * i;
  return Quadratic{-tr, det};
}

Cubic threshold_cubic(int n, double alpha) {
  check_alpha(alpha);
  const double a = alpha, N = n;
  return Cubic{
      -((a + 1) * N + a - 4),
      a * N * N + (a * a - 2 * a - 1) * N - 2 * a + 1,
      -(a * a) * N * N + (5 * a * a - 3 * a + 2) * N - 10 * a * a + 15 * a - 8};
}

Cubic second_family_cubic(int n, double alpha) {
  check_alpha(alpha);
  const double a = alpha, N = n;
  return Cubic{
      -((a + 1) * N + 2 * a - 6),
      a * N * N + (2 * a * a - 3 * a - 1) * N - 4 * a - 3,
      -2 * a * a * N * N + (18 * a * a - 14 * a + 8) * N - 72 * a * a + 118 * a - 56};
}

double tau_threshold(int n, double alpha) {
  return largest_real_root_hinted(threshold_cubic(n, alpha), n - 3.0, n - 1.0);
}

double theta_threshold(int n, double alpha) {
  return largest_real_root_hinted(second_family_cubic(n, alpha), n - 5.0, n - 1.0);
}

Cubic q_threshold_cubic(int n) {
  const double N = n;
  return Cubic{-(6 * N - 14) / 4.0, (2 * N * N - 7 * N) / 4.0,
               -(N * N - 7 * N + 12) / 4.0};
}

double mu_threshold(int n) {
  return largest_real_root_hinted(q_threshold_cubic(n), n - 3.0, n - 1.0);
}

std::vector<double> quotient_eigenvalues(int s, int n, double alpha) {
  check_alpha(alpha);
  if (s < 1 || n < s + floor_3s2(s) + 2)
    throw std::invalid_argument("no three-part quotient at these parameters");
  const HubBlocks h = hub_blocks(s, n, alpha);
  DenseSymMatrix m = DenseSymMatrix::zero(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m.at(i, j) = h.b[i][j] * std::sqrt(static_cast<double>(h.sizes[i]) / h.sizes[j]);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double v = 0.5 * (m.at(i, j) + m.at(j, i));
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return spectrum(m);
}

}  // namespace specfac
