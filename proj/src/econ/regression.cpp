#include "econ/regression.hpp"

#include <cmath>

namespace econ {

RegressionResult ols(std::span<const double> y, std::span<const double> x) {
  if (y.size() != x.size()) throw LengthMismatch(y.size(), x.size());
  const std::size_t n = y.size();
  if (n < 3) throw SeriesTooShort(3, n);

  double mean_x = 0;
  double mean_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0;
  double sxy = 0;
  double sum_sq_x = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    sxx += dx * dx;
    sxy += dx * (y[i] - mean_y);
    sum_sq_x += x[i] * x[i];
  }
  // No variation relative to the regressor's own scale (covers the all-zero
  // regressor, where both sides are 0).
  if (sxx <= 1e-24 * sum_sq_x) throw DegenerateRegressor();

  RegressionResult r;
  r.slope = sxy / sxx;
  r.intercept = mean_y - r.slope * mean_x;
  r.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.residuals[i] = y[i] - r.intercept - r.slope * x[i];
  return r;
}

}  // namespace econ
