#pragma once

#include <optional>
#include <vector>

#include "trading/prices.hpp"
#include "trading/strategy.hpp"

namespace trading {

enum class Direction {
  ShortSpread,  // short A, long B
  LongSpread,   // long A, short B
};

inline std::string to_string(Direction d) {
  return d == Direction::ShortSpread ? "short_spread" : "long_spread";
}

// Shares are signed throughout: positive = long, negative = short.
// A spread position always carries two equal-and-opposite legs.
struct Position {
  Direction direction;
  double shares_a = 0;
  double shares_b = 0;
  double entry_a = 0;
  double entry_b = 0;
  Date entry_date;
};

struct Trade {
  Direction direction;
  Date open_date;
  Date close_date;
  double shares_a = 0;  // signed, as held
  double shares_b = 0;
  double entry_a = 0;
  double entry_b = 0;
  double exit_a = 0;
  double exit_b = 0;
  double realized_pnl = 0;  // leg-wise (exit-entry) P&L minus all four leg costs
};

struct Portfolio {
  double cash = 0;
  std::optional<Position> position;
  std::vector<double> equity_curve;  // one mark-to-market balance per bar
  std::vector<Trade> trade_log;
};

struct StepConfig {
  double shares_per_leg = 1.0;
  double per_leg_cost = 0.0;  // flat fee charged per leg per transaction
};

// Applies one bar: executes the signal at this bar's prices, then appends
// the marked-to-market equity (cash plus signed leg values) to the curve.
void step_portfolio(Portfolio& pf, Signal signal, double price_a, double price_b,
                    const Date& date, const StepConfig& cfg);

// Mark-to-market balance at the given prices without recording anything.
double mark_equity(const Portfolio& pf, double price_a, double price_b);

}  // namespace trading
