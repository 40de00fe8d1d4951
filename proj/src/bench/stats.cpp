#include "bench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bench {

namespace {

// Continued-fraction core for the regularized incomplete beta function,
// modified Lentz evaluation of
//
//                      1   d1   d2
//   cf(a, b, x)  =    --- ----- ----- ...
//                     1 +  1 +   1 +
//
//   d_{2m+1} = -(a+m)(a+b+m) x / ((a+2m)(a+2m+1))
//   d_{2m}   =       m (b-m) x / ((a+2m-1)(a+2m))
//
// Converges rapidly for x < (a+1)/(a+b+2); the caller flips to the
// complement outside that region.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 500;
  constexpr double kEps = 1e-16;
  constexpr double kFloor = 1e-300;  // keeps Lentz denominators away from 0

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFloor) d = kFloor;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double numerator = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + numerator * d;
    if (std::fabs(d) < kFloor) d = kFloor;
    c = 1.0 + numerator / c;
    if (std::fabs(c) < kFloor) c = kFloor;
    d = 1.0 / d;
    h *= d * c;

    numerator = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + numerator * d;
    if (std::fabs(d) < kFloor) d = kFloor;
    c = 1.0 + numerator / c;
    if (std::fabs(c) < kFloor) c = kFloor;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) <= kEps) break;
  }
  return h;
}

double two_sided_p(double t, double dof) {
  // 2 * (1 - F(|t|)) == I_{dof/(dof+t^2)}(dof/2, 1/2); computing the beta
  // directly keeps p exact at t = 0 (x = 1 -> I = 1).
  const double x = dof / (dof + t * t);
  return regularized_incomplete_beta(dof / 2.0, 0.5, x);
}

}  // namespace

double sample_mean(std::span<const double> values) {
  double sum = 0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
  const double mean = sample_mean(values);
  double acc = 0;
  for (double v : values) acc += (v - mean) * (v - mean);
  return acc / static_cast<double>(values.size() - 1);
}

SummaryStats summarize(std::span<const double> samples) {
  if (samples.size() < 2) throw TooFewSamples(samples.size());
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());

  SummaryStats stats;
  stats.n = sorted.size();
  stats.mean = sample_mean(sorted);
  stats.stddev = std::sqrt(sample_variance(sorted));
  stats.min = sorted.front();
  stats.max = sorted.back();
  const std::size_t mid = sorted.size() / 2;
  stats.median = (sorted.size() % 2 == 1) ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return stats;
}

TTestResult paired_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  if (a.size() < 2) throw TooFewSamples(a.size());

  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];

  const double n = static_cast<double>(diff.size());
  const double mean = sample_mean(diff);
  const double variance = sample_variance(diff);
  if (variance <= 0.0) throw ZeroVariance();

  TTestResult result;
  result.kind = TestKind::Paired;
  result.t_stat = mean / std::sqrt(variance / n);
  result.degrees_of_freedom = n - 1.0;
  result.p_value = two_sided_p(result.t_stat, result.degrees_of_freedom);
  return result;
}

TTestResult two_sample_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2) throw TooFewSamples(a.size());
  if (b.size() < 2) throw TooFewSamples(b.size());

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = sample_variance(a);
  const double vb = sample_variance(b);
  const double sea = va / na;
  const double seb = vb / nb;
  const double se2 = sea + seb;
  if (se2 <= 0.0) throw ZeroVariance();

  TTestResult result;
  result.kind = TestKind::TwoSample;
  result.t_stat = (sample_mean(a) - sample_mean(b)) / std::sqrt(se2);
  result.degrees_of_freedom =
      se2 * se2 / (sea * sea / (na - 1.0) + seb * seb / (nb - 1.0));
  result.p_value = two_sided_p(result.t_stat, result.degrees_of_freedom);
  return result;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta parameters must be positive");
  if (std::isnan(x)) throw std::invalid_argument("beta argument is NaN");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;

  const double log_prefactor = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                               a * std::log(x) + b * std::log1p(-x);
  const double prefactor = std::exp(log_prefactor);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return prefactor * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - prefactor * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("degrees of freedom must be positive");
  if (std::isnan(t)) throw std::invalid_argument("t is NaN");
  const double x = dof / (dof + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(dof / 2.0, 0.5, x);
  return t >= 0.0 ? 1.0 - tail : tail;
}

}  // namespace bench
