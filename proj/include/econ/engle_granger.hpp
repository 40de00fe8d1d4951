#pragma once

#include <map>
#include <span>

#include "econ/adf.hpp"

namespace econ {

struct CointResult {
  double t_stat = 0;       // unit-root t on the cointegrating residuals
  int lags_used = 0;
  bool reject_at_5pct = false;
  double gamma = 0;        // estimated long-run coefficient of x
  // significance percent -> reject "no cointegration", judged against the
  // two-variable residual-test critical values (more negative rejects)
  std::map<int, bool> decision_at;
};

// Two-step residual-based cointegration test: regress y on x (with
// intercept), then run the unit-root test on the residuals with no
// deterministic terms. Requires equal lengths >= 30.
CointResult engle_granger(std::span<const double> y, std::span<const double> x);

}  // namespace econ
