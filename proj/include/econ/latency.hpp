#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace econ {

struct InvalidQuote : std::invalid_argument {
  explicit InvalidQuote(const char* what) : std::invalid_argument(what) {}
};

// Simultaneous top-of-book snapshot of one instrument on two venues plus the
// market-wide best bid/offer, bracketed by the interval the quotes persisted.
struct QuotePair {
  double bid_m1 = 0;
  double ask_m1 = 0;
  double bid_m2 = 0;
  double ask_m2 = 0;
  double nbb = 0;  // national best bid
  double nbo = 0;  // national best offer
  int64_t t_start_ns = 0;
  int64_t t_end_ns = 0;

  void validate() const {
    if (!(bid_m1 > 0) || !(ask_m1 > 0) || !(bid_m2 > 0) || !(ask_m2 > 0) || !(nbb > 0) ||
        !(nbo > 0))
      throw InvalidQuote("quote prices must be positive");
    if (t_end_ns < t_start_ns) throw InvalidQuote("quote interval must not end before it starts");
  }
};

struct LaoOpportunity {
  double profit_per_share = 0;
  int64_t duration_ns = 0;
};

// A latency-arbitrage opportunity exists exactly when the venues are crossed
// (venue-1 bid above venue-2 ask), both crossing quotes are at or better than
// the market-wide best on their side, and the condition persisted for a
// positive interval. Expects a QuotePair satisfying its invariants.
inline std::optional<LaoOpportunity> lao_detect(const QuotePair& q) {
  const bool crossed = q.bid_m1 > q.ask_m2;
  const bool at_best = q.bid_m1 >= q.nbb && q.ask_m2 <= q.nbo;
  const bool persisted = q.t_end_ns > q.t_start_ns;
  if (!(crossed && at_best && persisted)) return std::nullopt;
  return LaoOpportunity{q.bid_m1 - q.ask_m2, q.t_end_ns - q.t_start_ns};
}

// Linear sensitivity of unfavorable-order-book exposure to a latency change:
// a 1% latency increase moves exposure by 0.9%.
constexpr double exposure_elasticity(double latency_change_pct) {
  return 0.9 * latency_change_pct;
}

}  // namespace econ
