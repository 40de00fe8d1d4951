#include "bench/report.hpp"

#include <unistd.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bench/timing.hpp"
#include "disruptor/ring_buffer.hpp"
#include "json.hpp"

namespace bench {

using ordered_json = nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw ConfigError("unknown report format: " + name);
}

EnvironmentNote capture_environment() {
  EnvironmentNote env;
  env.timer_resolution_ns = timer_resolution_ns();
  env.cpu = cpu_identifier();
  env.pid = static_cast<int64_t>(::getpid());
  return env;
}

namespace {

ScenarioResult make_scenario(std::string name, const BenchConfig& config,
                             uint64_t ring_capacity, RunSamples runs) {
  ScenarioResult sc;
  sc.name = std::move(name);
  sc.num_events = config.num_events;
  sc.wait_strategy = std::string(disruptor::to_string(config.wait_strategy.kind));
  sc.ring_capacity = ring_capacity;
  sc.runs = std::move(runs);
  const auto accepted = sc.runs.accepted();
  if (accepted.size() >= 2) sc.stats = summarize(accepted);
  return sc;
}

}  // namespace

BenchReport run_comparison_bench(const std::vector<uint64_t>& event_sizes,
                                 const BenchConfig& base) {
  BenchReport report;
  report.environment = capture_environment();

  double speedup_sum = 0;
  std::size_t speedup_count = 0;
  for (const uint64_t events : event_sizes) {
    BenchConfig config = base;
    config.num_events = events;
    config.validate();

    ScenarioResult queue;
    {
      const int64_t phase_start = now_ns();
      RunSamples runs = run_queue_bench(config);
      const int64_t phase_end = now_ns();
      queue = make_scenario("mutex_queue", config, 0, std::move(runs));
      queue.wait_strategy.clear();  // not applicable to the baseline
      queue.phase_start_ns = phase_start;
      queue.phase_end_ns = phase_end;
    }

    ScenarioResult dis;
    const uint64_t capacity = disruptor::ring_capacity_for(config.num_events);
    {
      const int64_t phase_start = now_ns();
      RunSamples runs = run_disruptor_bench(config);
      const int64_t phase_end = now_ns();
      dis = make_scenario("disruptor", config, capacity, std::move(runs));
      dis.phase_start_ns = phase_start;
      dis.phase_end_ns = phase_end;
    }
    if (capacity < config.num_events) {
      report.notes.push_back("ring capacity capped at " + std::to_string(capacity) +
                             " slots for " + std::to_string(config.num_events) +
                             " events; producer backpressure engaged");
    }

    if (queue.stats && dis.stats) {
      ComparisonRow row;
      row.num_events = events;
      row.baseline_mean_ns = queue.stats->mean;
      row.candidate_mean_ns = dis.stats->mean;
      row.speedup_percent =
          100.0 * (row.baseline_mean_ns - row.candidate_mean_ns) / row.baseline_mean_ns;
      try {
        row.welch = two_sample_t_test(queue.runs.accepted(), dis.runs.accepted());
      } catch (const ZeroVariance&) {
        // Degenerate timing samples: leave the test absent rather than fail.
      }
      speedup_sum += row.speedup_percent;
      ++speedup_count;
      report.comparisons.push_back(std::move(row));
    }
    report.scenarios.push_back(std::move(queue));
    report.scenarios.push_back(std::move(dis));
  }
  if (speedup_count > 0) report.mean_speedup_percent = speedup_sum / speedup_count;
  return report;
}

MicroSuite parse_micro_suite(const std::string& name) {
  if (name == "all") return MicroSuite::All;
  if (name == "cache") return MicroSuite::Cache;
  if (name == "unroll") return MicroSuite::Unroll;
  if (name == "shortcircuit") return MicroSuite::ShortCircuit;
  if (name == "branch") return MicroSuite::Branch;
  if (name == "atomic") return MicroSuite::Atomic;
  if (name == "precision") return MicroSuite::Precision;
  throw ConfigError("unknown micro suite: " + name);
}

std::string to_string(MicroSuite suite) {
  switch (suite) {
    case MicroSuite::All: return "all";
    case MicroSuite::Cache: return "cache";
    case MicroSuite::Unroll: return "unroll";
    case MicroSuite::ShortCircuit: return "shortcircuit";
    case MicroSuite::Branch: return "branch";
    case MicroSuite::Atomic: return "atomic";
    case MicroSuite::Precision: return "precision";
  }
  return "unknown";
}

bool MicroSuiteReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

void add_check(MicroSuiteReport& report, std::string name, bool passed, std::string detail) {
  report.checks.push_back({std::move(name), passed, std::move(detail)});
}

}  // namespace

MicroSuiteReport run_micro_suite(MicroSuite which, uint64_t seed) {
  MicroSuiteReport report;
  report.environment = capture_environment();
  const bool all = which == MicroSuite::All;

  if (all || which == MicroSuite::Cache) {
    for (const std::size_t size : {std::size_t{1} << 14, std::size_t{1} << 22}) {
      const auto seq = micro_cache_pattern(size, TraversalOrder::Sequential, seed);
      const auto rnd = micro_cache_pattern(size, TraversalOrder::Random, seed);
      add_check(report, "cache_checksums_equal_size_" + std::to_string(size),
                seq.checksum == rnd.checksum,
                "sequential " + std::to_string(seq.checksum) + " vs random " +
                    std::to_string(rnd.checksum));
      report.cache_runs.push_back(seq);
      report.cache_runs.push_back(rnd);
    }
  }
  if (all || which == MicroSuite::Unroll) {
    const uint64_t n = 1u << 20;
    const auto r = micro_loop_unrolling(n);
    const uint64_t expected = n * (n - 1) / 2;
    add_check(report, "unroll_sums_equal",
              r.scalar_sum == expected && r.unrolled_sum == expected,
              "scalar " + std::to_string(r.scalar_sum) + ", unrolled " +
                  std::to_string(r.unrolled_sum) + ", expected " + std::to_string(expected));
    report.unroll_runs.push_back(r);
  }
  if (all || which == MicroSuite::ShortCircuit) {
    const uint64_t iters = 1u << 20;
    const auto r = micro_short_circuit(iters, seed, 0.5);
    add_check(report, "short_circuit_truth_tallies_equal", r.eager_true == r.short_true,
              "eager " + std::to_string(r.eager_true) + " vs short " +
                  std::to_string(r.short_true));
    add_check(report, "short_circuit_skips_second_predicate",
              r.eager_evals == iters && r.short_evals < r.eager_evals,
              "eager evals " + std::to_string(r.eager_evals) + ", short evals " +
                  std::to_string(r.short_evals));
    report.short_circuit_runs.push_back(r);
  }
  if (all || which == MicroSuite::Branch) {
    const auto r = micro_branch_reduction(1u << 20, seed);
    add_check(report, "branch_tallies_equal", r.results_equal,
              "A/B/C/hot " + std::to_string(r.branched_tally[0]) + "/" +
                  std::to_string(r.branched_tally[1]) + "/" +
                  std::to_string(r.branched_tally[2]) + "/" +
                  std::to_string(r.branched_tally[3]));
    report.branch_runs.push_back(r);
  }
  if (all || which == MicroSuite::Atomic) {
    for (const unsigned threads : {1u, 2u, 4u, 8u}) {
      const uint64_t increments = 50000;
      const auto r = micro_atomic_vs_mutex(threads, increments);
      const uint64_t expected = threads * increments;
      add_check(report, "counters_exact_threads_" + std::to_string(threads),
                r.atomic_final == expected && r.mutex_final == expected,
                "atomic " + std::to_string(r.atomic_final) + ", mutex " +
                    std::to_string(r.mutex_final) + ", expected " + std::to_string(expected));
      report.atomic_runs.push_back(r);
    }
  }
  if (all || which == MicroSuite::Precision) {
    const auto r = micro_mixed_precision(uint64_t{1} << 20, seed);
    add_check(report, "precision_diff_finite", std::isfinite(r.max_abs_diff),
              "max_abs_diff " + std::to_string(r.max_abs_diff) + " (informational)");
    report.precision_runs.push_back(r);
  }
  return report;
}

namespace {

ordered_json stats_to_json(const std::optional<SummaryStats>& stats) {
  if (!stats) return nullptr;
  return ordered_json{{"mean_ns", stats->mean},     {"stddev_ns", stats->stddev},
                      {"min_ns", stats->min},       {"max_ns", stats->max},
                      {"median_ns", stats->median}, {"n", stats->n}};
}

ordered_json ttest_to_json(const TTestResult& t) {
  return ordered_json{{"t_stat", t.t_stat},
                      {"degrees_of_freedom", t.degrees_of_freedom},
                      {"p_value", t.p_value},
                      {"kind", t.kind == TestKind::Paired ? "paired" : "two_sample"}};
}

ordered_json environment_to_json(const EnvironmentNote& env) {
  return ordered_json{{"timer_resolution_ns", env.timer_resolution_ns},
                      {"cpu", env.cpu},
                      {"pid", env.pid}};
}

ordered_json bench_to_json(const BenchReport& report) {
  ordered_json j;
  j["kind"] = "bench_report";
  j["environment"] = environment_to_json(report.environment);
  j["scenarios"] = ordered_json::array();
  for (const auto& sc : report.scenarios) {
    ordered_json s;
    s["name"] = sc.name;
    s["num_events"] = sc.num_events;
    s["wait_strategy"] = sc.wait_strategy.empty() ? ordered_json(nullptr)
                                                  : ordered_json(sc.wait_strategy);
    s["ring_capacity"] =
        sc.ring_capacity == 0 ? ordered_json(nullptr) : ordered_json(sc.ring_capacity);
    s["phase_start_ns"] = sc.phase_start_ns;
    s["phase_end_ns"] = sc.phase_end_ns;
    s["samples"] = ordered_json::array();
    for (const auto& sample : sc.runs.samples) {
      s["samples"].push_back(ordered_json{{"repetition", sample.repetition},
                                          {"elapsed_ns", sample.elapsed_ns},
                                          {"checksum_ok", sample.checksum_ok}});
    }
    s["corrupt_runs"] = sc.runs.corrupt_runs();
    s["stats"] = stats_to_json(sc.stats);
    j["scenarios"].push_back(std::move(s));
  }
  j["comparisons"] = ordered_json::array();
  for (const auto& row : report.comparisons) {
    ordered_json c;
    c["num_events"] = row.num_events;
    c["baseline_mean_ns"] = row.baseline_mean_ns;
    c["candidate_mean_ns"] = row.candidate_mean_ns;
    c["speedup_percent"] = row.speedup_percent;
    c["welch"] = row.welch ? ttest_to_json(*row.welch) : ordered_json(nullptr);
    j["comparisons"].push_back(std::move(c));
  }
  j["mean_speedup_percent"] = report.mean_speedup_percent
                                  ? ordered_json(*report.mean_speedup_percent)
                                  : ordered_json(nullptr);
  j["notes"] = report.notes;
  return j;
}

std::string bench_to_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "scenario,num_events,repetition,elapsed_ns,checksum_ok\n";
  for (const auto& sc : report.scenarios) {
    for (const auto& sample : sc.runs.samples) {
      out << sc.name << ',' << sc.num_events << ',' << sample.repetition << ','
          << sample.elapsed_ns << ',' << (sample.checksum_ok ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::string bench_to_text(const BenchReport& report) {
  std::ostringstream out;
  out << "benchmark report\n";
  out << "  cpu: " << (report.environment.cpu.empty() ? "(unknown)" : report.environment.cpu)
      << "\n";
  out << "  timer resolution: " << report.environment.timer_resolution_ns << " ns, pid "
      << report.environment.pid << "\n\n";
  for (const auto& sc : report.scenarios) {
    out << sc.name;
    if (!sc.wait_strategy.empty()) out << " (wait=" << sc.wait_strategy << ")";
    out << ", events=" << sc.num_events;
    if (sc.ring_capacity != 0) out << ", capacity=" << sc.ring_capacity;
    out << ": ";
    if (sc.stats) {
      out << "mean " << sc.stats->mean << " ns, stddev " << sc.stats->stddev << " ns, median "
          << sc.stats->median << " ns, min " << sc.stats->min << " ns, max " << sc.stats->max
          << " ns, n=" << sc.stats->n;
    } else {
      out << "insufficient accepted samples";
    }
    if (sc.runs.corrupt_runs() > 0) out << " [corrupt runs: " << sc.runs.corrupt_runs() << "]";
    out << "\n";
  }
  if (!report.comparisons.empty()) out << "\n";
  for (const auto& row : report.comparisons) {
    out << "events=" << row.num_events << ": queue mean " << row.baseline_mean_ns
        << " ns vs disruptor mean " << row.candidate_mean_ns << " ns, speedup "
        << row.speedup_percent << "%";
    if (row.welch) {
      out << ", Welch t=" << row.welch->t_stat << " df=" << row.welch->degrees_of_freedom
          << " p=" << row.welch->p_value;
    }
    out << "\n";
  }
  if (report.mean_speedup_percent) {
    out << "mean speedup across sizes: " << *report.mean_speedup_percent << "%\n";
  }
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  return out.str();
}

ordered_json micro_to_json(const MicroSuiteReport& report) {
  ordered_json j;
  j["kind"] = "micro_report";
  j["environment"] = environment_to_json(report.environment);
  j["cache"] = ordered_json::array();
  for (const auto& r : report.cache_runs) {
    j["cache"].push_back(ordered_json{
        {"size", r.size},
        {"order", r.order == TraversalOrder::Sequential ? "sequential" : "random"},
        {"elapsed_ns", r.elapsed_ns},
        {"checksum", r.checksum}});
  }
  j["unroll"] = ordered_json::array();
  for (const auto& r : report.unroll_runs) {
    j["unroll"].push_back(ordered_json{{"scalar_ns", r.scalar_ns},
                                       {"unrolled_ns", r.unrolled_ns},
                                       {"scalar_sum", r.scalar_sum},
                                       {"unrolled_sum", r.unrolled_sum}});
  }
  j["short_circuit"] = ordered_json::array();
  for (const auto& r : report.short_circuit_runs) {
    j["short_circuit"].push_back(ordered_json{{"eager_ns", r.eager_ns},
                                              {"short_ns", r.short_ns},
                                              {"eager_evals", r.eager_evals},
                                              {"short_evals", r.short_evals},
                                              {"eager_true", r.eager_true},
                                              {"short_true", r.short_true}});
  }
  j["branch"] = ordered_json::array();
  for (const auto& r : report.branch_runs) {
    j["branch"].push_back(ordered_json{{"branched_ns", r.branched_ns},
                                       {"flagged_ns", r.flagged_ns},
                                       {"results_equal", r.results_equal},
                                       {"tally", r.branched_tally}});
  }
  j["atomic"] = ordered_json::array();
  for (const auto& r : report.atomic_runs) {
    j["atomic"].push_back(ordered_json{{"threads", r.threads},
                                       {"increments", r.increments},
                                       {"atomic_ns", r.atomic_ns},
                                       {"mutex_ns", r.mutex_ns},
                                       {"atomic_final", r.atomic_final},
                                       {"mutex_final", r.mutex_final}});
  }
  j["precision"] = ordered_json::array();
  for (const auto& r : report.precision_runs) {
    j["precision"].push_back(ordered_json{{"mixed_ns", r.mixed_ns},
                                          {"unmixed_ns", r.unmixed_ns},
                                          {"max_abs_diff", r.max_abs_diff}});
  }
  j["checks"] = ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back(
        ordered_json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["all_passed"] = report.all_passed();
  return j;
}

std::string micro_to_csv(const MicroSuiteReport& report) {
  std::ostringstream out;
  out << "experiment,variant,elapsed_ns,detail\n";
  for (const auto& r : report.cache_runs) {
    out << "cache,"
        << (r.order == TraversalOrder::Sequential ? "sequential_" : "random_") << r.size << ','
        << r.elapsed_ns << ",checksum=" << r.checksum << '\n';
  }
  for (const auto& r : report.unroll_runs) {
    out << "unroll,scalar," << r.scalar_ns << ",sum=" << r.scalar_sum << '\n';
    out << "unroll,unrolled," << r.unrolled_ns << ",sum=" << r.unrolled_sum << '\n';
  }
  for (const auto& r : report.short_circuit_runs) {
    out << "shortcircuit,eager," << r.eager_ns << ",evals=" << r.eager_evals << '\n';
    out << "shortcircuit,short," << r.short_ns << ",evals=" << r.short_evals << '\n';
  }
  for (const auto& r : report.branch_runs) {
    out << "branch,chained," << r.branched_ns << ",equal=" << (r.results_equal ? "true" : "false")
        << '\n';
    out << "branch,flagged," << r.flagged_ns << ",equal=" << (r.results_equal ? "true" : "false")
        << '\n';
  }
  for (const auto& r : report.atomic_runs) {
    out << "atomic,atomic_t" << r.threads << ',' << r.atomic_ns << ",final=" << r.atomic_final
        << '\n';
    out << "atomic,mutex_t" << r.threads << ',' << r.mutex_ns << ",final=" << r.mutex_final
        << '\n';
  }
  for (const auto& r : report.precision_runs) {
    out << "precision,mixed," << r.mixed_ns << ",max_abs_diff=" << r.max_abs_diff << '\n';
    out << "precision,single," << r.unmixed_ns << ",max_abs_diff=" << r.max_abs_diff << '\n';
  }
  return out.str();
}

std::string micro_to_text(const MicroSuiteReport& report) {
  std::ostringstream out;
  out << "micro-benchmark report\n";
  out << "  cpu: " << (report.environment.cpu.empty() ? "(unknown)" : report.environment.cpu)
      << "\n";
  out << "  timer resolution: " << report.environment.timer_resolution_ns << " ns\n\n";
  for (const auto& r : report.cache_runs) {
    out << "cache " << (r.order == TraversalOrder::Sequential ? "sequential" : "random    ")
        << " size=" << r.size << ": " << r.elapsed_ns << " ns (checksum " << r.checksum << ")\n";
  }
  for (const auto& r : report.unroll_runs) {
    out << "unroll: scalar " << r.scalar_ns << " ns, unrolled " << r.unrolled_ns << " ns (sums "
        << r.scalar_sum << " / " << r.unrolled_sum << ")\n";
  }
  for (const auto& r : report.short_circuit_runs) {
    out << "short-circuit: eager " << r.eager_ns << " ns (" << r.eager_evals
        << " evals), short " << r.short_ns << " ns (" << r.short_evals << " evals)\n";
  }
  for (const auto& r : report.branch_runs) {
    out << "branch: chained " << r.branched_ns << " ns, flagged " << r.flagged_ns
        << " ns, tallies " << (r.results_equal ? "equal" : "DIFFER") << "\n";
  }
  for (const auto& r : report.atomic_runs) {
    out << "counter x" << r.threads << " threads: atomic " << r.atomic_ns << " ns, mutex "
        << r.mutex_ns << " ns (finals " << r.atomic_final << " / " << r.mutex_final << ")\n";
  }
  for (const auto& r : report.precision_runs) {
    out << "precision: mixed " << r.mixed_ns << " ns, single " << r.unmixed_ns
        << " ns, max |diff| " << r.max_abs_diff << "\n";
  }
  out << "\nchecks:\n";
  for (const auto& c : report.checks) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << " — " << c.detail << "\n";
  }
  out << (report.all_passed() ? "all checks passed\n" : "CORRECTNESS FAILURE\n");
  return out.str();
}

void write_or_stdout(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << body;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

std::string render_report(const BenchReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return bench_to_json(report).dump(2) + "\n";
    case ReportFormat::Csv: return bench_to_csv(report);
    case ReportFormat::Text: return bench_to_text(report);
  }
  return {};
}

std::string render_report(const MicroSuiteReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return micro_to_json(report).dump(2) + "\n";
    case ReportFormat::Csv: return micro_to_csv(report);
    case ReportFormat::Text: return micro_to_text(report);
  }
  return {};
}

void emit_report(const BenchReport& report, ReportFormat format, const std::string& path) {
  write_or_stdout(render_report(report, format), path);
}

void emit_report(const MicroSuiteReport& report, ReportFormat format, const std::string& path) {
  write_or_stdout(render_report(report, format), path);
}

}  // namespace bench
