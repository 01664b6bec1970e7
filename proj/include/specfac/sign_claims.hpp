#pragma once
#include <functional>
#include <string>
#include <vector>

namespace specfac {

struct GridPoint {
  double s = 0.0;  // hub size; real-valued because claims hold over intervals
  double n = 0.0;
  double alpha = 0.0;
};

// A polynomial inequality that must hold with a fixed sign over a parameter
// region.  `eval` returns the quantity; expected_sign is -1 (must be < 0,
// or <= 0 when allow_zero) or +1.  `slack` absorbs floating-point noise on
// claims whose value can sit exactly at zero analytically.
struct SignClaim {
  std::string name;
  std::string domain;  // human-readable description of the region sampled
  int expected_sign = -1;
  bool allow_zero = false;
  double slack = 0.0;
  std::vector<GridPoint> grid;
  std::function<double(const GridPoint&)> eval;
};

// Every inequality used along the way from the quotient bounds to the final
// statements, each with a grid of at least 100 sample points.
std::vector<SignClaim> sign_claim_registry();

struct SignClaimOutcome {
  std::string name;
  long points = 0;
  long violations = 0;
  double worst = 0.0;      // signed value closest to violating
  GridPoint worst_point;
};

SignClaimOutcome run_sign_claim(const SignClaim& c);

}  // namespace specfac
