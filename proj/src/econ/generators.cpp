#include "econ/generators.hpp"

#include <cmath>

#include "core/rng.hpp"

namespace econ {

void Ar1Config::validate() const {
  if (std::abs(coefficient) > 1.0)
    throw InvalidConfig("ar(1) coefficient must satisfy |value| <= 1");
  if (!(innovation_sigma > 0)) throw InvalidConfig("innovation sigma must be > 0");
}

std::vector<double> gen_ar1(const Ar1Config& config) {
  config.validate();
  std::vector<double> s(config.length, 0.0);
  core::Rng rng(config.seed);
  for (std::size_t t = 1; t < config.length; ++t) {
    s[t] = config.coefficient * s[t - 1] + config.innovation_sigma * rng.next_gaussian();
  }
  return s;
}

std::pair<std::vector<double>, std::vector<double>> gen_cointegrated_pair(double gamma,
                                                                          double residual_rho,
                                                                          std::size_t n,
                                                                          uint64_t seed) {
  if (std::abs(residual_rho) >= 1.0)
    throw InvalidConfig("residual_rho must satisfy |value| < 1 for a stationary spread");

  std::vector<double> x(n);
  core::Rng walk_rng(seed);
  double level = 0;
  for (std::size_t t = 0; t < n; ++t) {
    level += walk_rng.next_gaussian();
    x[t] = level;
  }

  std::vector<double> spread(n, 0.0);
  core::Rng spread_rng(seed + 1);
  for (std::size_t t = 1; t < n; ++t) {
    spread[t] = residual_rho * spread[t - 1] + spread_rng.next_gaussian();
  }

  std::vector<double> y(n);
  for (std::size_t t = 0; t < n; ++t) y[t] = gamma * x[t] + spread[t];
  return {std::move(y), std::move(x)};
}

}  // namespace econ
