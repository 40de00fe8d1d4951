#include "trading/portfolio.hpp"

namespace trading {

double mark_equity(const Portfolio& pf, double price_a, double price_b) {
  double equity = pf.cash;
  if (pf.position) {
    equity += pf.position->shares_a * price_a + pf.position->shares_b * price_b;
  }
  return equity;
}

void step_portfolio(Portfolio& pf, Signal signal, double price_a, double price_b,
                    const Date& date, const StepConfig& cfg) {
  switch (signal) {
    case Signal::OpenShortSpread:
    case Signal::OpenLongSpread: {
      if (pf.position) break;  // no pyramiding; treated as Hold
      const double s = cfg.shares_per_leg;
      Position pos;
      pos.direction =
          signal == Signal::OpenShortSpread ? Direction::ShortSpread : Direction::LongSpread;
      pos.shares_a = signal == Signal::OpenShortSpread ? -s : s;
      pos.shares_b = -pos.shares_a;
      pos.entry_a = price_a;
      pos.entry_b = price_b;
      pos.entry_date = date;
      // Cash moves opposite to the shares acquired; both legs pay a fee.
      pf.cash -= pos.shares_a * price_a + pos.shares_b * price_b;
      pf.cash -= 2 * cfg.per_leg_cost;
      pf.position = pos;
      break;
    }
    case Signal::ClosePositions: {
      if (!pf.position) break;  // nothing to close; treated as Hold
      const Position& pos = *pf.position;
      pf.cash += pos.shares_a * price_a + pos.shares_b * price_b;
      pf.cash -= 2 * cfg.per_leg_cost;
      Trade t;
      t.direction = pos.direction;
      t.open_date = pos.entry_date;
      t.close_date = date;
      t.shares_a = pos.shares_a;
      t.shares_b = pos.shares_b;
      t.entry_a = pos.entry_a;
      t.entry_b = pos.entry_b;
      t.exit_a = price_a;
      t.exit_b = price_b;
      t.realized_pnl = pos.shares_a * (price_a - pos.entry_a) +
                       pos.shares_b * (price_b - pos.entry_b) - 4 * cfg.per_leg_cost;
      pf.trade_log.push_back(t);
      pf.position.reset();
      break;
    }
    case Signal::Hold:
      break;
  }
  pf.equity_curve.push_back(mark_equity(pf, price_a, price_b));
}

}  // namespace trading
