#pragma once
#include <stdexcept>

namespace specfac {

// Input exceeds a documented size or feature cap (CLI maps this to exit 4).
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget before it could decide either way.
struct inconclusive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace specfac
