#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bench/report.hpp"
#include "econ/engle_granger.hpp"
#include "econ/generators.hpp"
#include "trading/backtest.hpp"
#include "trading/prices.hpp"
#include "trading/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;        // bad flags, bad config, unreadable input
constexpr int kCorrectness = 2;  // a benchmark or equivalence check failed

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- helpers --

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw UsageError("value for '" + key + "' is not a non-negative integer: " + value);
  return out;
}

double parse_f64(const std::string& key, const std::string& value) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw UsageError("value for '" + key + "' is not a number: " + value);
  return out;
}

std::vector<uint64_t> parse_size_list(const std::string& key, const std::string& csv) {
  std::vector<uint64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw UsageError("empty entry in '" + key + "' list");
    out.push_back(parse_u64(key, item));
  }
  if (out.empty()) throw UsageError("'" + key + "' needs at least one value");
  return out;
}

disruptor::WaitStrategy parse_wait(const std::string& name) {
  if (name == "spin") return disruptor::WaitStrategy::busy_spin();
  if (name == "yield") return disruptor::WaitStrategy::yielding();
  if (name == "sleep") return disruptor::WaitStrategy::sleep_backoff();
  throw UsageError("unknown wait strategy '" + name + "' (expected spin|yield|sleep)");
}

// Report format: explicit name wins; otherwise inferred from the output
// file's extension; plain text on stdout.
bench::ReportFormat pick_format(const std::string& explicit_name, const std::string& out_path) {
  if (!explicit_name.empty()) return bench::parse_report_format(explicit_name);
  if (ends_with(out_path, ".json")) return bench::ReportFormat::Json;
  if (ends_with(out_path, ".csv")) return bench::ReportFormat::Csv;
  return bench::ReportFormat::Text;
}

// ------------------------------------------------------------ config file --

// Flat `key=value` lines ('#' comments allowed) or a single JSON object of
// scalars. Keys mirror the subcommand's flags; explicitly passed flags win.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::map<std::string, std::string> kv;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw UsageError("JSON config must be a single object");
    for (const auto& [key, value] : j.items()) {
      if (value.is_string()) {
        kv[key] = value.get<std::string>();
      } else if (value.is_boolean()) {
        kv[key] = value.get<bool>() ? "true" : "false";
      } else if (value.is_number()) {
        kv[key] = value.dump();
      } else {
        throw UsageError("config key '" + key + "' must be a scalar");
      }
    }
    return kv;
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq));
    if (key.empty())
      throw UsageError(path + ":" + std::to_string(line_no) + ": empty key");
    kv[key] = trim(t.substr(eq + 1));
  }
  return kv;
}

struct KeyBinding {
  CLI::Option* opt = nullptr;  // flag presence check; config never overrides it
  std::function<void(const std::string&)> apply;
};
using KeyMap = std::map<std::string, KeyBinding>;

void merge_config(const std::string& config_path, const KeyMap& keys) {
  if (config_path.empty()) return;
  for (const auto& [key, value] : read_config_file(config_path)) {
    const auto it = keys.find(key);
    if (it == keys.end()) throw UsageError("unknown config key: " + key);
    if (it->second.opt != nullptr && it->second.opt->count() > 0) continue;
    it->second.apply(value);
  }
}

KeyBinding bind_u64(CLI::Option* opt, uint64_t& target, std::string key) {
  return {opt, [&target, key](const std::string& v) { target = parse_u64(key, v); }};
}
KeyBinding bind_f64(CLI::Option* opt, double& target, std::string key) {
  return {opt, [&target, key](const std::string& v) { target = parse_f64(key, v); }};
}
KeyBinding bind_str(CLI::Option* opt, std::string& target) {
  return {opt, [&target](const std::string& v) { target = v; }};
}

// -------------------------------------------------------------- gen output --

void write_price_csv(const std::string& path, const std::vector<double>& values, double offset) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open for writing: " + path);
  out << "Date,Adj Close\n";
  trading::Date date{2015, 1, 2};
  char buf[64];
  for (double v : values) {
    std::snprintf(buf, sizeof buf, "%s,%.6f\n", date.to_string().c_str(), offset + v);
    out << buf;
    date = date.plus_days(1);
  }
  out.flush();
  if (!out) throw UsageError("write failed: " + path);
}

// Series loaded for trading/cointegration commands are named by file stem.
std::string ticker_from_path(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = stem.find_last_of('.');
  if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return stem.empty() ? path : stem;
}

// ------------------------------------------------------------ subcommands --

int cmd_bench_disruptor(uint64_t events, uint64_t reps, const std::string& wait_name,
                        const std::string& format_name, const std::string& out,
                        const std::string& sweep) {
  bench::BenchConfig base;
  base.num_events = events;
  base.repetitions = static_cast<uint32_t>(reps);
  base.wait_strategy = parse_wait(wait_name);
  base.validate();
  const bench::ReportFormat format = pick_format(format_name, out);

  std::vector<uint64_t> sizes = sweep.empty() ? std::vector<uint64_t>{events}
                                              : parse_size_list("sweep", sweep);
  for (uint64_t n : sizes) {
    if (n == 0) throw UsageError("sweep sizes must be positive");
  }

  const bench::BenchReport report = bench::run_comparison_bench(sizes, base);
  bench::emit_report(report, format, out);

  std::size_t corrupt = 0;
  for (const auto& scenario : report.scenarios) corrupt += scenario.runs.corrupt_runs();
  if (corrupt > 0) {
    std::fprintf(stderr, "error: %zu corrupt run(s) — event stream checksum mismatch\n", corrupt);
    return kCorrectness;
  }
  return kOk;
}

int cmd_bench_micro(const std::string& suite_name, uint64_t seed, const std::string& format_name,
                    const std::string& out) {
  const bench::MicroSuite suite = bench::parse_micro_suite(suite_name);
  const bench::ReportFormat format = pick_format(format_name, out);
  const bench::MicroSuiteReport report = bench::run_micro_suite(suite, seed);
  bench::emit_report(report, format, out);
  if (!report.all_passed()) {
    for (const auto& check : report.checks) {
      if (!check.passed)
        std::fprintf(stderr, "error: correctness check failed: %s (%s)\n", check.name.c_str(),
                     check.detail.c_str());
    }
    return kCorrectness;
  }
  return kOk;
}

struct BacktestFlags {
  std::string a, b, mode = "scalar", out;
  uint64_t window = 16;
  double cash = 1'000'000.0;
  double gamma = 1.0;
  double shares_per_leg = 1.0;
  double per_leg_cost = 0.0;
  double open_threshold = 1.0;
  double close_threshold = 0.8;
  double risk_free_per_period = 0.0;
};

int cmd_backtest(const BacktestFlags& f) {
  if (f.mode != "scalar" && f.mode != "optimized" && f.mode != "both")
    throw UsageError("unknown mode '" + f.mode + "' (expected scalar|optimized|both)");

  const trading::PriceSeries sa = trading::load_prices(f.a, ticker_from_path(f.a));
  const trading::PriceSeries sb = trading::load_prices(f.b, ticker_from_path(f.b));
  const trading::PricePair pair = trading::align(sa, sb);

  trading::BacktestConfig cfg;
  cfg.window = f.window;
  cfg.initial_cash = f.cash;
  cfg.gamma = f.gamma;
  cfg.shares_per_leg = f.shares_per_leg;
  cfg.per_leg_cost = f.per_leg_cost;
  cfg.open_threshold = f.open_threshold;
  cfg.close_threshold = f.close_threshold;
  cfg.risk_free_per_period = f.risk_free_per_period;

  const bool json = ends_with(f.out, ".json");
  if (f.mode == "both") {
    const trading::EquivalenceResult res = trading::run_backtest_both(pair, cfg);
    trading::emit_text(json ? trading::render_equivalence_json(res)
                            : trading::render_equivalence_text(res),
                       f.out);
    if (!res.equivalent()) {
      std::fprintf(stderr, "error: scalar and optimized paths diverged (max |dz| = %g)\n",
                   res.max_abs_z_diff);
      return kCorrectness;
    }
    return kOk;
  }

  cfg.mode = f.mode == "scalar" ? trading::Mode::Scalar : trading::Mode::Optimized;
  const trading::BacktestReport report = trading::backtest(pair, cfg);
  trading::emit_text(json ? trading::render_backtest_json(report)
                          : trading::render_backtest_text(report),
                     f.out);
  return kOk;
}

int cmd_coint(const std::string& a_path, const std::string& b_path) {
  const trading::PriceSeries sa = trading::load_prices(a_path, ticker_from_path(a_path));
  const trading::PriceSeries sb = trading::load_prices(b_path, ticker_from_path(b_path));
  const trading::PricePair pair = trading::align(sa, sb);

  std::vector<double> y, x;
  y.reserve(pair.n());
  x.reserve(pair.n());
  for (const auto& row : pair.a.rows) y.push_back(row.adj_close);
  for (const auto& row : pair.b.rows) x.push_back(row.adj_close);

  const econ::CointResult res = econ::engle_granger(y, x);
  std::printf("engle-granger cointegration test\n");
  std::printf("  pair      : %s / %s (%zu common bars)\n", pair.a.ticker.c_str(),
              pair.b.ticker.c_str(), pair.n());
  std::printf("  gamma     : %.6f\n", res.gamma);
  std::printf("  t-stat    : %.4f\n", res.t_stat);
  std::printf("  lags      : %d\n", res.lags_used);
  for (int pct : {1, 5, 10}) {
    std::printf("  at %2d%%    : %s the no-cointegration hypothesis\n", pct,
                res.decision_at.at(pct) ? "reject" : "accept");
  }
  return kOk;
}

int cmd_gen(const std::string& kind, uint64_t n, uint64_t seed, double rho, double sigma,
            double gamma, double offset, const std::vector<std::string>& out_paths) {
  if (kind == "ar1") {
    if (out_paths.size() != 1)
      throw UsageError("--kind ar1 writes one series; pass exactly one --out path");
    econ::Ar1Config cfg;
    cfg.coefficient = rho;
    cfg.innovation_sigma = sigma;
    cfg.length = n;
    cfg.seed = seed;
    write_price_csv(out_paths[0], econ::gen_ar1(cfg), offset);
    return kOk;
  }
  if (kind == "cointegrated") {
    if (out_paths.size() != 2)
      throw UsageError("--kind cointegrated writes a pair; pass two --out paths (y then x)");
    const auto [y, x] = econ::gen_cointegrated_pair(gamma, rho, n, seed);
    write_price_csv(out_paths[0], y, offset);
    write_price_csv(out_paths[1], x, offset);
    return kOk;
  }
  throw UsageError("unknown kind '" + kind + "' (expected ar1|cointegrated)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"low-latency trading workbench: disruptor benchmarks, microbenchmark suite,\n"
               "pairs-trading backtests, and cointegration tools"};
  app.require_subcommand(1);

  // --- bench-disruptor ---
  auto* bd = app.add_subcommand("bench-disruptor",
                                "compare the ring-buffer pipeline against a mutex queue");
  uint64_t bd_events = 10000, bd_reps = 20;
  std::string bd_wait = "yield", bd_format, bd_out, bd_sweep, bd_config;
  auto* bd_events_opt = bd->add_option("--events", bd_events, "events per repetition");
  auto* bd_reps_opt = bd->add_option("--reps", bd_reps, "timed repetitions per scenario");
  auto* bd_wait_opt = bd->add_option("--wait", bd_wait, "wait strategy: spin|yield|sleep");
  auto* bd_format_opt =
      bd->add_option("--format", bd_format, "json|csv|text (default: by --out extension)");
  auto* bd_out_opt = bd->add_option("--out", bd_out, "output path (default: stdout)");
  auto* bd_sweep_opt =
      bd->add_option("--sweep", bd_sweep, "comma-separated event counts, e.g. 10,100,1000");
  bd->add_option("--config", bd_config, "key=value or JSON config file; explicit flags win");
  const KeyMap bd_keys = {
      {"events", bind_u64(bd_events_opt, bd_events, "events")},
      {"reps", bind_u64(bd_reps_opt, bd_reps, "reps")},
      {"wait", bind_str(bd_wait_opt, bd_wait)},
      {"format", bind_str(bd_format_opt, bd_format)},
      {"out", bind_str(bd_out_opt, bd_out)},
      {"sweep", bind_str(bd_sweep_opt, bd_sweep)},
  };

  // --- bench-micro ---
  auto* bm = app.add_subcommand("bench-micro", "mechanical-sympathy microbenchmark suite");
  std::string bm_suite = "all", bm_format, bm_out, bm_config;
  uint64_t bm_seed = 42;
  auto* bm_suite_opt = bm->add_option(
      "--suite", bm_suite, "all|cache|unroll|shortcircuit|branch|atomic|precision");
  auto* bm_seed_opt = bm->add_option("--seed", bm_seed, "seed for generated workloads");
  auto* bm_format_opt =
      bm->add_option("--format", bm_format, "json|csv|text (default: by --out extension)");
  auto* bm_out_opt = bm->add_option("--out", bm_out, "output path (default: stdout)");
  bm->add_option("--config", bm_config, "key=value or JSON config file; explicit flags win");
  const KeyMap bm_keys = {
      {"suite", bind_str(bm_suite_opt, bm_suite)},
      {"seed", bind_u64(bm_seed_opt, bm_seed, "seed")},
      {"format", bind_str(bm_format_opt, bm_format)},
      {"out", bind_str(bm_out_opt, bm_out)},
  };

  // --- backtest ---
  auto* bt = app.add_subcommand("backtest", "run the pairs mean-reversion strategy on two CSVs");
  BacktestFlags bt_flags;
  std::string bt_config;
  auto* bt_a_opt = bt->add_option("--a", bt_flags.a, "price CSV for leg A")->required();
  auto* bt_b_opt = bt->add_option("--b", bt_flags.b, "price CSV for leg B")->required();
  auto* bt_window_opt = bt->add_option("--window", bt_flags.window, "rolling window length");
  auto* bt_mode_opt = bt->add_option("--mode", bt_flags.mode, "scalar|optimized|both");
  auto* bt_cash_opt = bt->add_option("--cash", bt_flags.cash, "initial cash");
  auto* bt_out_opt = bt->add_option("--out", bt_flags.out,
                                    "output path (default: stdout; .json selects JSON)");
  bt->add_option("--config", bt_config,
                 "key=value or JSON config file (also: gamma, shares_per_leg, per_leg_cost, "
                 "open_threshold, close_threshold, risk_free_per_period)");
  const KeyMap bt_keys = {
      {"a", bind_str(bt_a_opt, bt_flags.a)},
      {"b", bind_str(bt_b_opt, bt_flags.b)},
      {"window", bind_u64(bt_window_opt, bt_flags.window, "window")},
      {"mode", bind_str(bt_mode_opt, bt_flags.mode)},
      {"cash", bind_f64(bt_cash_opt, bt_flags.cash, "cash")},
      {"out", bind_str(bt_out_opt, bt_flags.out)},
      {"gamma", bind_f64(nullptr, bt_flags.gamma, "gamma")},
      {"shares_per_leg", bind_f64(nullptr, bt_flags.shares_per_leg, "shares_per_leg")},
      {"per_leg_cost", bind_f64(nullptr, bt_flags.per_leg_cost, "per_leg_cost")},
      {"open_threshold", bind_f64(nullptr, bt_flags.open_threshold, "open_threshold")},
      {"close_threshold", bind_f64(nullptr, bt_flags.close_threshold, "close_threshold")},
      {"risk_free_per_period",
       bind_f64(nullptr, bt_flags.risk_free_per_period, "risk_free_per_period")},
  };

  // --- coint ---
  auto* ct = app.add_subcommand("coint", "two-step residual cointegration test on two CSVs");
  std::string ct_a, ct_b, ct_config;
  auto* ct_a_opt = ct->add_option("--a", ct_a, "price CSV for y")->required();
  auto* ct_b_opt = ct->add_option("--b", ct_b, "price CSV for x")->required();
  ct->add_option("--config", ct_config, "key=value or JSON config file; explicit flags win");
  const KeyMap ct_keys = {
      {"a", bind_str(ct_a_opt, ct_a)},
      {"b", bind_str(ct_b_opt, ct_b)},
  };

  // --- gen ---
  auto* gn = app.add_subcommand("gen", "generate deterministic synthetic price CSVs");
  std::string gn_kind, gn_config;
  uint64_t gn_n = 1250, gn_seed = 42;
  double gn_rho = 0.5, gn_sigma = 1.0, gn_gamma = 1.5, gn_offset = 10000.0;
  std::vector<std::string> gn_out;
  auto* gn_kind_opt = gn->add_option("--kind", gn_kind, "ar1|cointegrated")->required();
  auto* gn_n_opt = gn->add_option("--n", gn_n, "series length (0 gives a header-only CSV)");
  auto* gn_seed_opt = gn->add_option("--seed", gn_seed, "generator seed");
  auto* gn_rho_opt = gn->add_option(
      "--rho", gn_rho, "ar1: autoregressive coefficient; cointegrated: residual coefficient");
  auto* gn_sigma_opt = gn->add_option("--sigma", gn_sigma, "ar1 innovation stddev");
  auto* gn_gamma_opt = gn->add_option("--gamma", gn_gamma, "cointegrated: long-run coefficient");
  auto* gn_offset_opt = gn->add_option(
      "--offset", gn_offset, "additive price level keeping generated prices positive");
  auto* gn_out_opt = gn->add_option("--out", gn_out,
                                    "output CSV path(s): one for ar1, two for cointegrated")
                         ->required()
                         ->expected(1, 2);
  gn->add_option("--config", gn_config, "key=value or JSON config file; explicit flags win");
  const KeyMap gn_keys = {
      {"kind", bind_str(gn_kind_opt, gn_kind)},
      {"n", bind_u64(gn_n_opt, gn_n, "n")},
      {"seed", bind_u64(gn_seed_opt, gn_seed, "seed")},
      {"rho", bind_f64(gn_rho_opt, gn_rho, "rho")},
      {"sigma", bind_f64(gn_sigma_opt, gn_sigma, "sigma")},
      {"gamma", bind_f64(gn_gamma_opt, gn_gamma, "gamma")},
      {"offset", bind_f64(gn_offset_opt, gn_offset, "offset")},
      // Comma-separated in a config file: out=y.csv,x.csv
      {"out", {gn_out_opt, [&gn_out](const std::string& v) {
                 gn_out.clear();
                 std::stringstream ss(v);
                 std::string item;
                 while (std::getline(ss, item, ',')) gn_out.push_back(trim(item));
               }}},
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (bd->parsed()) {
      merge_config(bd_config, bd_keys);
      return cmd_bench_disruptor(bd_events, bd_reps, bd_wait, bd_format, bd_out, bd_sweep);
    }
    if (bm->parsed()) {
      merge_config(bm_config, bm_keys);
      return cmd_bench_micro(bm_suite, bm_seed, bm_format, bm_out);
    }
    if (bt->parsed()) {
      merge_config(bt_config, bt_keys);
      return cmd_backtest(bt_flags);
    }
    if (ct->parsed()) {
      merge_config(ct_config, ct_keys);
      return cmd_coint(ct_a, ct_b);
    }
    if (gn->parsed()) {
      merge_config(gn_config, gn_keys);
      return cmd_gen(gn_kind, gn_n, gn_seed, gn_rho, gn_sigma, gn_gamma, gn_offset, gn_out);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
