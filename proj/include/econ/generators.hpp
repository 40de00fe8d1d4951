#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "econ/regression.hpp"

namespace econ {

struct InvalidConfig : std::invalid_argument {
  explicit InvalidConfig(const std::string& what) : std::invalid_argument(what) {}
};

struct Ar1Config {
  double coefficient = 0;       // |coefficient| <= 1; 1 gives a random walk
  double innovation_sigma = 1;  // > 0
  std::size_t length = 0;
  uint64_t seed = 0;

  void validate() const;
};

// First-order autoregression s_t = coefficient * s_{t-1} + sigma * eps_t with
// standard-normal innovations; s_0 = 0. Bit-reproducible per seed.
std::vector<double> gen_ar1(const Ar1Config& config);

// Cointegrated pair: x is a unit-variance random walk started at its first
// innovation (seeded from `seed`), the spread y - gamma*x is a stationary
// AR(1) with coefficient residual_rho started at zero (seeded from seed + 1).
// Returns (y, x). Requires |residual_rho| < 1.
std::pair<std::vector<double>, std::vector<double>> gen_cointegrated_pair(double gamma,
                                                                          double residual_rho,
                                                                          std::size_t n,
                                                                          uint64_t seed);

}  // namespace econ
