#pragma once

#include <map>
#include <optional>
#include <span>

#include "econ/regression.hpp"

namespace econ {

// Deterministic terms included in the unit-root regression. Constant is the
// default for raw price/level series; None is used for regression residuals,
// which are mean-zero by construction.
enum class Deterministics { Constant, None };

struct CriticalValues {
  double pct1 = 0;
  double pct5 = 0;
  double pct10 = 0;
};

// Asymptotic Dickey-Fuller critical values for the single-series test, from
// MacKinnon (2010), "Critical Values for Cointegration Tests", Queen's
// Economics Department Working Paper No. 1227, Table 1 (response-surface
// infinite-sample constants).
CriticalValues adf_critical_values(Deterministics det);

// Two-variable (one regressor) cointegration critical values for the
// residual-based test, same source.
CriticalValues engle_granger_critical_values();

struct AdfResult {
  double t_stat = 0;
  int lags_used = 0;
  // significance percent (1, 5, 10) -> reject the unit-root hypothesis
  std::map<int, bool> decision_at;
};

// Augmented Dickey-Fuller unit-root test: regresses the first difference on
// the lagged level and `p` lagged differences, p chosen by AIC over
// 0..max_lags with all candidates fitted on the common sample trimmed at
// max_lags (ties take the smaller lag), then re-estimated on the full usable
// sample. Default max_lags is the Schwert rule floor(12*(T/100)^(1/4)),
// clamped so the regression stays estimable. t_stat is the lagged-level
// coefficient over its standard error; decisions compare it against the
// embedded critical values (more negative rejects).
AdfResult adf_test(std::span<const double> series, std::optional<int> max_lags = std::nullopt,
                   Deterministics det = Deterministics::Constant);

}  // namespace econ
