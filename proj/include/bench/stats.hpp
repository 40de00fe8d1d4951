#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

namespace bench {

struct TooFewSamples : std::invalid_argument {
  explicit TooFewSamples(std::size_t n)
      : std::invalid_argument("need at least 2 samples, got " + std::to_string(n)) {}
};

struct LengthMismatch : std::invalid_argument {
  LengthMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("sample lengths differ: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

struct ZeroVariance : std::invalid_argument {
  ZeroVariance() : std::invalid_argument("variance is zero; t-statistic undefined") {}
};

struct SummaryStats {
  double mean = 0;
  double stddev = 0;  // sample form, N-1 denominator
  double min = 0;
  double max = 0;
  double median = 0;
  std::size_t n = 0;
};

// Descriptive statistics over at least two samples.
SummaryStats summarize(std::span<const double> samples);

double sample_mean(std::span<const double> values);
double sample_variance(std::span<const double> values);  // N-1 denominator

enum class TestKind { Paired, TwoSample };

struct TTestResult {
  double t_stat = 0;
  double degrees_of_freedom = 0;  // fractional for the Welch form
  double p_value = 1;             // two-sided
  TestKind kind = TestKind::Paired;
};

// t on the elementwise differences a - b: t = mean(d) / (sd(d)/sqrt(n)),
// df = n - 1. Differences with zero variance (a == b elementwise, shifted or
// not) raise ZeroVariance.
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

// Welch unequal-variance form with the Welch-Satterthwaite df. Raises
// ZeroVariance when both samples are internally constant.
TTestResult two_sample_t_test(std::span<const double> a, std::span<const double> b);

// Regularized incomplete beta I_x(a, b), a,b > 0, x in [0,1], evaluated with
// the standard continued fraction (modified Lentz). Accurate to ~1e-15.
double regularized_incomplete_beta(double a, double b, double x);

// P(T <= t) for Student's t with dof degrees of freedom; dof may be
// fractional (Welch). Uses I_x through the tail identity.
double student_t_cdf(double t, double dof);

}  // namespace bench
