#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "disruptor/wait_strategy.hpp"

namespace bench {

struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct BenchConfig {
  uint64_t num_events = 1000;
  uint32_t repetitions = 20;
  disruptor::WaitStrategy wait_strategy{};
  uint32_t warmup_runs = 3;  // untimed repetitions before sampling
  uint64_t seed = 42;

  void validate() const {
    if (num_events == 0) throw ConfigError("num_events must be > 0");
    if (repetitions == 0) throw ConfigError("repetitions must be > 0");
  }
};

struct Sample {
  uint32_t repetition = 0;
  double elapsed_ns = 0;
  bool checksum_ok = false;
};

// All timed repetitions of one scenario. A sample whose consumer-side
// checksum failed is kept for reporting but excluded from statistics.
struct RunSamples {
  std::vector<Sample> samples;

  std::vector<double> accepted() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples)
      if (s.checksum_ok) out.push_back(s.elapsed_ns);
    return out;
  }

  std::size_t corrupt_runs() const {
    std::size_t n = 0;
    for (const auto& s : samples)
      if (!s.checksum_ok) ++n;
    return n;
  }
};

// End-to-end wall time per repetition of pushing num_events labeled events
// through a fresh ring buffer (capacity: smallest power of two covering
// num_events, capped at 65536 so backpressure engages on large runs) with a
// dedicated consumer thread. The consumer folds every payload into an
// order-sensitive checksum; a mismatch marks the sample corrupt.
RunSamples run_disruptor_bench(const BenchConfig& config);

// Mirror image over the mutex/condition-variable queue baseline.
RunSamples run_queue_bench(const BenchConfig& config);

// Order-sensitive FNV-1a fold over the label stream "Event 0".."Event n-1";
// the expected value for both benches' consumer checksums.
uint64_t expected_label_checksum(uint64_t num_events);

inline constexpr uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
uint64_t fnv1a(uint64_t hash, const char* data, std::size_t size);

}  // namespace bench
