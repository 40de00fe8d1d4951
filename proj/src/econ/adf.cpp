#include "econ/adf.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace econ {

// MacKinnon (2010), "Critical Values for Cointegration Tests", Queen's
// Economics Department Working Paper No. 1227: asymptotic constants from the
// response-surface estimates (beta_inf column).
CriticalValues adf_critical_values(Deterministics det) {
  if (det == Deterministics::Constant) return {-3.43035, -2.86154, -2.56677};
  return {-2.56574, -1.941, -1.61682};
}

CriticalValues engle_granger_critical_values() { return {-3.89644, -3.33613, -3.04445}; }

namespace {

// Design for the differenced regression with p lagged differences, trimmed so
// the first `trim` difference observations are dropped (trim >= p). Response
// is d_t = s[t+1]-s[t]; regressor columns are ordered
//   [lagged level s[t], constant?, d_{t-1}, ..., d_{t-p}]
// so every smaller candidate's design is a column prefix of the largest one.
struct Design {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
};

Design build_design(std::span<const double> s, int trim, int p, bool with_const) {
  const int diffs = static_cast<int>(s.size()) - 1;
  const int rows = diffs - trim;
  const int cols = 1 + (with_const ? 1 : 0) + p;
  Design d;
  d.x.resize(rows, cols);
  d.y.resize(rows);
  for (int r = 0; r < rows; ++r) {
    const int t = trim + r;
    d.y(r) = s[t + 1] - s[t];
    int c = 0;
    d.x(r, c++) = s[t];
    if (with_const) d.x(r, c++) = 1.0;
    for (int j = 1; j <= p; ++j) d.x(r, c++) = s[t - j + 1] - s[t - j];
  }
  return d;
}

}  // namespace

AdfResult adf_test(std::span<const double> series, std::optional<int> max_lags,
                   Deterministics det) {
  const int t_len = static_cast<int>(series.size());
  if (t_len < 20) throw SeriesTooShort(20, series.size());
  const bool with_const = det == Deterministics::Constant;
  const int ntrend = with_const ? 1 : 0;

  // Schwert rule unless the caller pins the bound; either way clamp so the
  // widest candidate regression keeps at least one residual degree of freedom.
  int max_lag = max_lags ? *max_lags
                         : static_cast<int>(std::floor(
                               12.0 * std::pow(static_cast<double>(t_len) / 100.0, 0.25)));
  if (max_lag < 0) max_lag = 0;
  const int feasible = (t_len - 3 - ntrend) / 2;
  if (max_lag > feasible) max_lag = feasible;

  // Lag choice: every candidate p in 0..max_lag is fitted on the common
  // sample trimmed at max_lag; AIC = n*ln(SSR/n) + 2k, ties to the smaller
  // lag. Candidate designs are column prefixes, so one Gram matrix serves all.
  int best_lag = 0;
  {
    const Design d = build_design(series, max_lag, max_lag, with_const);
    const int n = static_cast<int>(d.y.size());
    const Eigen::MatrixXd gram = d.x.transpose() * d.x;
    const Eigen::VectorXd moment = d.x.transpose() * d.y;
    const double yy = d.y.squaredNorm();

    double best_aic = std::numeric_limits<double>::infinity();
    for (int p = 0; p <= max_lag; ++p) {
      const int k = 1 + ntrend + p;
      const Eigen::VectorXd beta =
          gram.topLeftCorner(k, k).ldlt().solve(moment.head(k));
      const double ssr = yy - 2.0 * beta.dot(moment.head(k)) +
                         beta.dot(gram.topLeftCorner(k, k) * beta);
      const double aic =
          n * std::log(std::max(ssr, 1e-300) / n) + 2.0 * k;
      if (aic < best_aic) {
        best_aic = aic;
        best_lag = p;
      }
    }
  }

  // Re-estimate the chosen specification on the full usable sample (only
  // best_lag rows trimmed) and read the lagged-level t-statistic off it.
  const Design d = build_design(series, best_lag, best_lag, with_const);
  const int n = static_cast<int>(d.y.size());
  const int k = 1 + ntrend + best_lag;
  const Eigen::MatrixXd gram = d.x.transpose() * d.x;
  const Eigen::VectorXd beta = gram.ldlt().solve(d.x.transpose() * d.y);
  const double ssr = (d.y - d.x * beta).squaredNorm();
  const double sigma2 = ssr / (n - k);
  const Eigen::MatrixXd gram_inv = gram.inverse();
  const double se = std::sqrt(sigma2 * gram_inv(0, 0));

  AdfResult result;
  result.t_stat = beta(0) / se;
  result.lags_used = best_lag;
  const CriticalValues cv = adf_critical_values(det);
  result.decision_at = {{1, result.t_stat < cv.pct1},
                        {5, result.t_stat < cv.pct5},
                        {10, result.t_stat < cv.pct10}};
  return result;
}

}  // namespace econ
