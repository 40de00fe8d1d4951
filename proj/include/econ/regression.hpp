#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace econ {

struct LengthMismatch : std::invalid_argument {
  LengthMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("series lengths differ: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

struct SeriesTooShort : std::invalid_argument {
  SeriesTooShort(std::size_t need, std::size_t got)
      : std::invalid_argument("series too short: need at least " + std::to_string(need) +
                              " observations, got " + std::to_string(got)) {}
};

struct DegenerateRegressor : std::invalid_argument {
  DegenerateRegressor() : std::invalid_argument("regressor has no variation") {}
};

// Two-variable least squares y ~ intercept + slope * x.
struct RegressionResult {
  double slope = 0;
  double intercept = 0;
  std::vector<double> residuals;  // y - intercept - slope * x
};

// Closed-form normal equations. Requires equal lengths >= 3 and a
// non-constant regressor. Residuals satisfy sum(e) ~ 0 and sum(e*x) ~ 0 to
// floating-point accuracy by construction.
RegressionResult ols(std::span<const double> y, std::span<const double> x);

}  // namespace econ
