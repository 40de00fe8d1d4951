#include "trading/backtest.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace trading {
namespace {

// A window whose variance falls below accumulated-rounding noise relative to
// its second moment is flat: no meaningful z-score exists for it.
constexpr double kFlatRelVariance = 1e-12;

struct Moments {
  double mean = 0;
  double variance = 0;
  double second_moment = 0;
  bool flat() const { return !(variance > kFlatRelVariance * second_moment); }
};

// Reference path: chronological vector, plain one-accumulator loops.
class ScalarWindow {
 public:
  explicit ScalarWindow(std::size_t n) : cap_(n) { values_.reserve(n); }

  void push(double v) {
    if (values_.size() == cap_) values_.erase(values_.begin());
    values_.push_back(v);
  }

  Moments moments() const {
    double sum = 0;
    for (double v : values_) sum += v;
    double sum_sq = 0;
    for (double v : values_) sum_sq += v * v;
    const double n = static_cast<double>(values_.size());
    Moments m;
    m.mean = sum / n;
    m.second_moment = sum_sq / n;
    m.variance = m.second_moment - m.mean * m.mean;
    return m;
  }

 private:
  std::size_t cap_;
  std::vector<double> values_;
};

// Fast path: fixed ring buffer, four independent accumulator lanes folded at
// the end. No allocation after construction; requires capacity % 4 == 0.
class LaneWindow {
 public:
  explicit LaneWindow(std::size_t n) : ring_(n, 0.0) {}

  void push(double v) {
    ring_[write_] = v;
    write_ = (write_ + 1) % ring_.size();
  }

  Moments moments() const {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    double q0 = 0, q1 = 0, q2 = 0, q3 = 0;
    const double* p = ring_.data();
    for (std::size_t i = 0; i < ring_.size(); i += 4) {
      s0 += p[i];
      s1 += p[i + 1];
      s2 += p[i + 2];
      s3 += p[i + 3];
      q0 += p[i] * p[i];
      q1 += p[i + 1] * p[i + 1];
      q2 += p[i + 2] * p[i + 2];
      q3 += p[i + 3] * p[i + 3];
    }
    const double n = static_cast<double>(ring_.size());
    Moments m;
    m.mean = ((s0 + s1) + (s2 + s3)) / n;
    m.second_moment = ((q0 + q1) + (q2 + q3)) / n;
    m.variance = m.second_moment - m.mean * m.mean;
    return m;
  }

 private:
  std::vector<double> ring_;
  std::size_t write_ = 0;
};

template <typename Window>
void run_strategy(const PricePair& pair, const BacktestConfig& cfg, BacktestReport& rep) {
  const std::size_t n = pair.n();
  const std::size_t N = cfg.window;

  Portfolio pf;
  pf.cash = cfg.initial_cash;
  pf.equity_curve.reserve(n);
  const StepConfig step{cfg.shares_per_leg, cfg.per_leg_cost};

  Window window(N);

  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < n; ++t) {
    const double pa = pair.a.rows[t].adj_close;
    const double pb = pair.b.rows[t].adj_close;
    const double spread = pa - cfg.gamma * pb;

    Signal sig = Signal::Hold;
    if (t >= N) {
      // The current bar is judged against the stats of the N bars before it.
      const Moments m = window.moments();
      double z = std::numeric_limits<double>::quiet_NaN();
      if (!m.flat()) {
        z = zscore(spread, m.mean, std::sqrt(m.variance));
        sig = signal_from_z(z, pf.position.has_value(), cfg.open_threshold,
                            cfg.close_threshold);
      }
      rep.zscores.push_back(z);
      rep.signals.push_back(sig);
    }
    step_portfolio(pf, sig, pa, pb, pair.a.rows[t].date, step);
    window.push(spread);
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();

  rep.final_balance = pf.equity_curve.back();
  if (pf.position) {
    const Position& pos = *pf.position;
    const double la = pair.a.rows[n - 1].adj_close;
    const double lb = pair.b.rows[n - 1].adj_close;
    // Entry-side fees are part of the open trade's mark-to-market P&L.
    rep.unrealized_pnl = pos.shares_a * (la - pos.entry_a) + pos.shares_b * (lb - pos.entry_b) -
                         2 * cfg.per_leg_cost;
    rep.open_position = pos;
  }
  try {
    rep.sharpe = sharpe_ratio(pf.equity_curve, cfg.risk_free_per_period);
  } catch (const ZeroVariance&) {
    rep.sharpe.reset();
  }
  rep.equity_curve = std::move(pf.equity_curve);
  rep.trade_log = std::move(pf.trade_log);
}

}  // namespace

double sharpe_ratio(std::span<const double> equity_curve, double risk_free_per_period) {
  if (equity_curve.size() < 2) throw TooFewSamples(equity_curve.size());
  const std::size_t m = equity_curve.size() - 1;
  double mean = 0;
  std::vector<double> excess(m);
  for (std::size_t i = 0; i < m; ++i) {
    excess[i] = (equity_curve[i + 1] - equity_curve[i]) / equity_curve[i] - risk_free_per_period;
    mean += excess[i];
  }
  mean /= static_cast<double>(m);
  double ss = 0;
  for (double e : excess) ss += (e - mean) * (e - mean);
  if (m < 2 || !(ss > 0)) throw ZeroVariance();
  const double sd = std::sqrt(ss / static_cast<double>(m - 1));
  return mean / sd * std::sqrt(252.0);
}

BacktestReport backtest(const PricePair& pair, const BacktestConfig& config) {
  if (config.window == 0) throw std::invalid_argument("window must be positive");
  if (config.mode == Mode::Optimized && config.window % 4 != 0)
    throw WindowNotMultipleOfFour(config.window);
  if (pair.n() <= config.window) throw WindowTooLarge(config.window, pair.n());

  BacktestReport rep;
  rep.mode = config.mode;
  rep.ticker_a = pair.a.ticker;
  rep.ticker_b = pair.b.ticker;
  rep.window = config.window;
  rep.initial_cash = config.initial_cash;
  rep.signals.reserve(pair.n() - config.window);
  rep.zscores.reserve(pair.n() - config.window);

  if (config.mode == Mode::Scalar) {
    run_strategy<ScalarWindow>(pair, config, rep);
  } else {
    run_strategy<LaneWindow>(pair, config, rep);
  }
  return rep;
}

EquivalenceResult run_backtest_both(const PricePair& pair, BacktestConfig config) {
  EquivalenceResult res;
  config.mode = Mode::Optimized;
  res.optimized = backtest(pair, config);
  config.mode = Mode::Scalar;
  res.scalar = backtest(pair, config);

  res.signals_identical = res.scalar.signals == res.optimized.signals;
  double mx = 0;
  for (std::size_t i = 0; i < res.scalar.zscores.size(); ++i) {
    const double zs = res.scalar.zscores[i];
    const double zo = res.optimized.zscores[i];
    const bool ns = std::isnan(zs), no = std::isnan(zo);
    if (ns != no) {
      mx = std::numeric_limits<double>::infinity();
    } else if (!ns) {
      mx = std::max(mx, std::fabs(zs - zo));
    }
  }
  res.max_abs_z_diff = mx;
  return res;
}

}  // namespace trading
