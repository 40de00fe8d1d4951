#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bench/micro.hpp"
#include "bench/runner.hpp"
#include "bench/stats.hpp"

namespace bench {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

enum class ReportFormat { Json, Csv, Text };

// Accepts "json" | "csv" | "text"; throws ConfigError otherwise.
ReportFormat parse_report_format(const std::string& name);

struct EnvironmentNote {
  double timer_resolution_ns = 0;
  std::string cpu;  // empty when not obtainable
  int64_t pid = 0;
};
EnvironmentNote capture_environment();

// One benchmarked structure at one event count, with per-repetition samples
// and phase markers (monotonic ns) for external profiler attribution.
struct ScenarioResult {
  std::string name;           // "disruptor" | "mutex_queue"
  uint64_t num_events = 0;
  std::string wait_strategy;  // empty when not applicable
  uint64_t ring_capacity = 0; // 0 when not applicable
  int64_t phase_start_ns = 0;
  int64_t phase_end_ns = 0;
  RunSamples runs;
  std::optional<SummaryStats> stats;  // absent when < 2 accepted samples
};

struct ComparisonRow {
  uint64_t num_events = 0;
  double baseline_mean_ns = 0;   // mutex queue
  double candidate_mean_ns = 0;  // disruptor
  double speedup_percent = 0;    // 100*(baseline - candidate)/baseline
  std::optional<TTestResult> welch;
};

struct BenchReport {
  EnvironmentNote environment;
  std::vector<ScenarioResult> scenarios;
  std::vector<ComparisonRow> comparisons;
  std::optional<double> mean_speedup_percent;  // unweighted mean over comparisons
  std::vector<std::string> notes;
};

// Runs queue + disruptor back to back for every event count, summarizes,
// Welch-tests, and computes per-size speedups plus their unweighted mean.
// `base` supplies repetitions/wait strategy/warmup/seed; num_events is taken
// from event_sizes.
BenchReport run_comparison_bench(const std::vector<uint64_t>& event_sizes,
                                 const BenchConfig& base);

enum class MicroSuite { All, Cache, Unroll, ShortCircuit, Branch, Atomic, Precision };

// Accepts "all" | "cache" | "unroll" | "shortcircuit" | "branch" | "atomic"
// | "precision"; throws ConfigError otherwise.
MicroSuite parse_micro_suite(const std::string& name);
std::string to_string(MicroSuite suite);

struct MicroCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct MicroSuiteReport {
  EnvironmentNote environment;
  std::vector<CachePatternResult> cache_runs;
  std::vector<LoopUnrollResult> unroll_runs;
  std::vector<ShortCircuitResult> short_circuit_runs;
  std::vector<BranchReductionResult> branch_runs;
  std::vector<AtomicVsMutexResult> atomic_runs;
  std::vector<MixedPrecisionResult> precision_runs;
  std::vector<MicroCheck> checks;
  bool all_passed() const;
};

MicroSuiteReport run_micro_suite(MicroSuite which, uint64_t seed);

// Renders with stable field ordering (schema documented in
// docs/report_schema.md). emit_report writes to `path`, or to stdout when
// path is empty; throws IoError when the file cannot be written.
std::string render_report(const BenchReport& report, ReportFormat format);
std::string render_report(const MicroSuiteReport& report, ReportFormat format);
void emit_report(const BenchReport& report, ReportFormat format, const std::string& path);
void emit_report(const MicroSuiteReport& report, ReportFormat format, const std::string& path);

}  // namespace bench
