#include "trading/report.hpp"

#include <cinttypes>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "json.hpp"

namespace trading {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json trade_to_json(const Trade& t) {
  ordered_json j;
  j["direction"] = to_string(t.direction);
  j["open_date"] = t.open_date.to_string();
  j["close_date"] = t.close_date.to_string();
  j["shares_a"] = t.shares_a;
  j["shares_b"] = t.shares_b;
  j["entry_a"] = t.entry_a;
  j["entry_b"] = t.entry_b;
  j["exit_a"] = t.exit_a;
  j["exit_b"] = t.exit_b;
  j["realized_pnl"] = t.realized_pnl;
  return j;
}

ordered_json report_to_json(const BacktestReport& r) {
  ordered_json j;
  j["kind"] = "backtest_report";
  j["mode"] = to_string(r.mode);
  j["ticker_a"] = r.ticker_a;
  j["ticker_b"] = r.ticker_b;
  j["window"] = r.window;
  j["num_bars"] = r.equity_curve.size();
  j["initial_cash"] = r.initial_cash;
  j["final_balance"] = r.final_balance;
  if (r.sharpe) {
    j["sharpe"] = *r.sharpe;
  } else {
    j["sharpe"] = nullptr;
  }
  j["unrealized_pnl"] = r.unrealized_pnl;
  j["num_trades"] = r.trade_log.size();
  ordered_json sigs = ordered_json::array();
  for (Signal s : r.signals) sigs.push_back(to_string(s));
  j["signals"] = std::move(sigs);
  j["zscores"] = r.zscores;  // NaN entries serialize as null
  j["equity_curve"] = r.equity_curve;
  ordered_json trades = ordered_json::array();
  for (const Trade& t : r.trade_log) trades.push_back(trade_to_json(t));
  j["trade_log"] = std::move(trades);
  if (r.open_position) {
    const Position& p = *r.open_position;
    ordered_json pos;
    pos["direction"] = to_string(p.direction);
    pos["entry_date"] = p.entry_date.to_string();
    pos["shares_a"] = p.shares_a;
    pos["shares_b"] = p.shares_b;
    pos["entry_a"] = p.entry_a;
    pos["entry_b"] = p.entry_b;
    j["open_position"] = std::move(pos);
  } else {
    j["open_position"] = nullptr;
  }
  j["elapsed_ns"] = r.elapsed_ns;
  return j;
}

#if defined(__GNUC__)
__attribute__((format(printf, 1, 2)))
#endif
std::string
fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

double total_realized(const BacktestReport& r) {
  double sum = 0;
  for (const Trade& t : r.trade_log) sum += t.realized_pnl;
  return sum;
}

}  // namespace

std::string render_backtest_json(const BacktestReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

std::string render_equivalence_json(const EquivalenceResult& result) {
  ordered_json j;
  j["kind"] = "backtest_equivalence";
  j["signals_identical"] = result.signals_identical;
  j["max_abs_z_diff"] = result.max_abs_z_diff;  // may be null if infinite
  j["equivalent"] = result.equivalent();
  j["scalar_elapsed_ns"] = result.scalar.elapsed_ns;
  j["optimized_elapsed_ns"] = result.optimized.elapsed_ns;
  j["scalar"] = report_to_json(result.scalar);
  j["optimized"] = report_to_json(result.optimized);
  return j.dump(2) + "\n";
}

std::string render_backtest_text(const BacktestReport& r) {
  std::string out;
  out += fmt("mean-reversion backtest (%s)\n", to_string(r.mode).c_str());
  out += fmt("  pair            : %s / %s\n", r.ticker_a.c_str(), r.ticker_b.c_str());
  out += fmt("  bars            : %zu (window %zu)\n", r.equity_curve.size(), r.window);
  out += fmt("  initial cash    : %.2f\n", r.initial_cash);
  out += fmt("  final balance   : %.2f\n", r.final_balance);
  if (r.sharpe) {
    out += fmt("  sharpe (ann.)   : %.4f\n", *r.sharpe);
  } else {
    out += "  sharpe (ann.)   : undefined (constant returns)\n";
  }
  out += fmt("  realized trades : %zu\n", r.trade_log.size());
  out += fmt("  realized P&L    : %.2f\n", total_realized(r));
  if (r.open_position) {
    out += fmt("  unrealized P&L  : %.2f (%s open since %s)\n", r.unrealized_pnl,
               to_string(r.open_position->direction).c_str(),
               r.open_position->entry_date.to_string().c_str());
  } else {
    out += "  unrealized P&L  : 0.00 (no open position)\n";
  }
  out += fmt("  loop time       : %" PRId64 " ns\n", r.elapsed_ns);
  if (!r.trade_log.empty()) {
    out += "\n";
    out += fmt("  %-4s %-13s %-11s %-11s %9s %9s %9s %9s %9s %9s %10s\n", "#", "direction",
               "open", "close", "sh(A)", "sh(B)", "entry A", "entry B", "exit A", "exit B",
               "P&L");
    for (std::size_t i = 0; i < r.trade_log.size(); ++i) {
      const Trade& t = r.trade_log[i];
      out += fmt("  %-4zu %-13s %-11s %-11s %9.2f %9.2f %9.2f %9.2f %9.2f %9.2f %10.2f\n",
                 i + 1, to_string(t.direction).c_str(), t.open_date.to_string().c_str(),
                 t.close_date.to_string().c_str(), t.shares_a, t.shares_b, t.entry_a, t.entry_b,
                 t.exit_a, t.exit_b, t.realized_pnl);
    }
  }
  return out;
}

std::string render_equivalence_text(const EquivalenceResult& result) {
  std::string out;
  out += "scalar vs optimized decision-path comparison\n";
  out += fmt("  signals identical : %s\n", result.signals_identical ? "yes" : "no");
  out += fmt("  max |z| difference: %.3e\n", result.max_abs_z_diff);
  out += fmt("  equivalent        : %s\n", result.equivalent() ? "yes" : "no");
  out += fmt("  scalar loop time  : %" PRId64 " ns\n", result.scalar.elapsed_ns);
  out += fmt("  optimized loop    : %" PRId64 " ns\n", result.optimized.elapsed_ns);
  out += "\n" + render_backtest_text(result.scalar);
  out += "\n" + render_backtest_text(result.optimized);
  return out;
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace trading
