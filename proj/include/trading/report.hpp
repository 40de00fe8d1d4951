#pragma once

#include <string>

#include "trading/backtest.hpp"

namespace trading {

// Machine form: stable field order; NaN z-scores appear as JSON null.
std::string render_backtest_json(const BacktestReport& report);

// Equivalence run: both reports plus the comparison verdict and runtimes.
std::string render_equivalence_json(const EquivalenceResult& result);

// Human form: aligned summary plus a trade table.
std::string render_backtest_text(const BacktestReport& report);

std::string render_equivalence_text(const EquivalenceResult& result);

// Writes to `path`, or to stdout when `path` is empty. Throws on I/O failure.
void emit_text(const std::string& text, const std::string& path);

}  // namespace trading
