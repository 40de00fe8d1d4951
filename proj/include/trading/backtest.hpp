#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trading/portfolio.hpp"
#include "trading/prices.hpp"
#include "trading/strategy.hpp"

namespace trading {

struct WindowTooLarge : std::invalid_argument {
  WindowTooLarge(std::size_t window, std::size_t bars)
      : std::invalid_argument("window of " + std::to_string(window) +
                              " bars needs more than " + std::to_string(window) +
                              " aligned bars, got " + std::to_string(bars)) {}
};

struct WindowNotMultipleOfFour : std::invalid_argument {
  explicit WindowNotMultipleOfFour(std::size_t window)
      : std::invalid_argument("lane-accumulated mode needs a window divisible by 4, got " +
                              std::to_string(window)) {}
};

struct ZeroVariance : std::domain_error {
  ZeroVariance() : std::domain_error("Sharpe ratio undefined for constant returns") {}
};

struct TooFewSamples : std::invalid_argument {
  explicit TooFewSamples(std::size_t got)
      : std::invalid_argument("Sharpe ratio needs at least two equity points, got " +
                              std::to_string(got)) {}
};

enum class Mode {
  Scalar,     // straightforward per-bar recomputation over the window
  Optimized,  // fixed rolling buffer, four-lane accumulators, no per-bar allocation
};

inline std::string to_string(Mode m) { return m == Mode::Scalar ? "scalar" : "optimized"; }

struct BacktestConfig {
  std::size_t window = 16;       // trailing bars behind each z-score
  double open_threshold = 1.0;   // enter when |z| strictly exceeds this
  double close_threshold = 0.8;  // exit when |z| is strictly inside this
  double initial_cash = 1'000'000.0;
  Mode mode = Mode::Scalar;
  double gamma = 1.0;  // spread = price_a - gamma * price_b
  double shares_per_leg = 1.0;
  double per_leg_cost = 0.0;
  double risk_free_per_period = 0.0;
};

struct BacktestReport {
  Mode mode = Mode::Scalar;
  std::string ticker_a;
  std::string ticker_b;
  std::size_t window = 0;
  double initial_cash = 0;
  double final_balance = 0;               // mark-to-market equity on the last bar
  std::optional<double> sharpe;           // absent when returns have no variance
  double unrealized_pnl = 0;              // open position: leg-wise move minus entry costs
  std::vector<Signal> signals;            // one per bar after warm-up (n - window)
  std::vector<double> zscores;            // aligned with signals; NaN marks a flat window
  std::vector<double> equity_curve;       // one mark per bar, all n bars
  std::vector<Trade> trade_log;
  std::optional<Position> open_position;  // position still open on the last bar
  int64_t elapsed_ns = 0;                 // wall time of the signal/portfolio loop
};

// Annualized Sharpe ratio of per-bar simple returns of the equity curve:
// mean excess return over its sample standard deviation, scaled by sqrt(252).
double sharpe_ratio(std::span<const double> equity_curve, double risk_free_per_period = 0.0);

// Runs the mean-reversion strategy over an aligned pair. Requires strictly
// more bars than the window; Optimized mode requires window % 4 == 0.
BacktestReport backtest(const PricePair& pair, const BacktestConfig& config);

struct EquivalenceResult {
  BacktestReport scalar;
  BacktestReport optimized;
  bool signals_identical = false;
  double max_abs_z_diff = 0;  // NaN-at-same-bar counts as equal
  bool equivalent() const { return signals_identical && max_abs_z_diff <= 1e-9; }
};

// Runs both modes on the same pair and compares their decision paths.
EquivalenceResult run_backtest_both(const PricePair& pair, BacktestConfig config);

}  // namespace trading
