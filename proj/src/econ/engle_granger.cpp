#include "econ/engle_granger.hpp"

#include "econ/regression.hpp"

namespace econ {

CointResult engle_granger(std::span<const double> y, std::span<const double> x) {
  if (y.size() != x.size()) throw LengthMismatch(y.size(), x.size());
  if (y.size() < 30) throw SeriesTooShort(30, y.size());

  const RegressionResult step1 = ols(y, x);
  const AdfResult step2 = adf_test(step1.residuals, std::nullopt, Deterministics::None);

  CointResult r;
  r.t_stat = step2.t_stat;
  r.lags_used = step2.lags_used;
  r.gamma = step1.slope;
  const CriticalValues cv = engle_granger_critical_values();
  r.decision_at = {{1, r.t_stat < cv.pct1},
                   {5, r.t_stat < cv.pct5},
                   {10, r.t_stat < cv.pct10}};
  r.reject_at_5pct = r.decision_at.at(5);
  return r;
}

}  // namespace econ
