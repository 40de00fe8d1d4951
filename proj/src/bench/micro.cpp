#include "bench/micro.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "bench/timing.hpp"
#include "core/rng.hpp"

#if defined(__GNUC__)
#define QB_NOINLINE __attribute__((noinline))
#else
#define QB_NOINLINE
#endif

namespace bench {

namespace {

// Fisher-Yates using the project RNG so runs are reproducible by seed.
void shuffle_indices(std::vector<uint32_t>& idx, core::Rng& rng) {
  for (std::size_t i = idx.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(idx[i - 1], idx[j]);
  }
}

}  // namespace

CachePatternResult micro_cache_pattern(std::size_t size, TraversalOrder order, uint64_t seed) {
  core::Rng rng(seed);
  std::vector<uint64_t> data(size);
  for (auto& v : data) v = rng.next_u64() & 0xFFFF;  // small values, no overflow concerns

  // Both orders walk an index array so the loop body is identical; only the
  // memory access pattern differs.
  std::vector<uint32_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0u);
  if (order == TraversalOrder::Random) shuffle_indices(idx, rng);

  auto* data_ptr = data.data();
  auto* idx_ptr = idx.data();
  do_not_optimize(data_ptr);
  do_not_optimize(idx_ptr);
  const int64_t start = now_ns();
  uint64_t sum = 0;
  for (std::size_t i = 0; i < size; ++i) sum += data[idx[i]];
  do_not_optimize(sum);
  const int64_t stop = now_ns();

  CachePatternResult r;
  r.size = size;
  r.order = order;
  r.elapsed_ns = static_cast<double>(stop - start);
  r.checksum = sum;
  return r;
}

LoopUnrollResult micro_loop_unrolling(uint64_t n) {
  if (n % 4 != 0) throw NotMultipleOfFour(n);
  LoopUnrollResult r;

  uint64_t bound = n;
  do_not_optimize(bound);  // keep the trip count opaque to constant folding
  {
    const int64_t start = now_ns();
    uint64_t sum = 0;
    for (uint64_t i = 0; i < bound; ++i) sum += i;
    do_not_optimize(sum);
    const int64_t stop = now_ns();
    r.scalar_ns = static_cast<double>(stop - start);
    r.scalar_sum = sum;
  }
  {
    const int64_t start = now_ns();
    uint64_t sum = 0;
    for (uint64_t i = 0; i < bound; i += 4) sum += i + (i + 1) + (i + 2) + (i + 3);
    do_not_optimize(sum);
    const int64_t stop = now_ns();
    r.unrolled_ns = static_cast<double>(stop - start);
    r.unrolled_sum = sum;
  }
  return r;
}

namespace {

// Deliberately costly second conjunct; the counter records every evaluation.
QB_NOINLINE bool expensive_predicate(uint64_t i, uint64_t& evals) {
  ++evals;
  uint64_t h = i * 0x9E3779B97F4A7C15ULL;
  h ^= h >> 29;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 32;
  return (h & 1) != 0;
}

ShortCircuitResult run_short_circuit(const std::vector<uint8_t>& first_terms) {
  ShortCircuitResult r;
  const std::size_t n = first_terms.size();
  {
    const int64_t start = now_ns();
    for (std::size_t i = 0; i < n; ++i) {
      // Bitwise & on the operands forces both to be evaluated every time.
      const unsigned both =
          static_cast<unsigned>(first_terms[i]) &
          static_cast<unsigned>(expensive_predicate(i, r.eager_evals));
      r.eager_true += both;
    }
    const int64_t stop = now_ns();
    r.eager_ns = static_cast<double>(stop - start);
  }
  {
    const int64_t start = now_ns();
    for (std::size_t i = 0; i < n; ++i) {
      if (first_terms[i] != 0 && expensive_predicate(i, r.short_evals)) ++r.short_true;
    }
    const int64_t stop = now_ns();
    r.short_ns = static_cast<double>(stop - start);
  }
  return r;
}

}  // namespace

ShortCircuitResult micro_short_circuit(uint64_t iterations, uint64_t seed,
                                       double first_true_fraction) {
  core::Rng rng(seed);
  std::vector<uint8_t> first(iterations);
  for (auto& f : first) f = rng.next_unit() <= first_true_fraction ? 1 : 0;
  return run_short_circuit(first);
}

ShortCircuitResult micro_short_circuit(std::span<const uint8_t> first_terms) {
  return run_short_circuit(std::vector<uint8_t>(first_terms.begin(), first_terms.end()));
}

namespace {

// Error handlers are cold paths: never inlined, so the comparison measures
// dispatch shape rather than handler body placement.
QB_NOINLINE void handle_error(uint64_t& slot) { ++slot; }

// Re-checks flags with the same priority order as the if/else-if chain.
QB_NOINLINE void dispatch_flagged(unsigned flags, std::array<uint64_t, 4>& tally) {
  if (flags & 1u) {
    handle_error(tally[0]);
  } else if (flags & 2u) {
    handle_error(tally[1]);
  } else {
    handle_error(tally[2]);
  }
}

}  // namespace

BranchReductionResult micro_branch_reduction(uint64_t iterations, uint64_t seed) {
  core::Rng rng(seed);
  // Three preconditions per iteration, each rare, packed into one byte:
  // bit0 = condition A, bit1 = B, bit2 = C. Zero means the hot path.
  std::vector<uint8_t> flags(iterations);
  for (auto& f : flags) {
    const uint64_t u = rng.next_u64();
    unsigned packed = 0;
    if ((u & 0x3F) == 0) packed |= 1u;          // ~1/64
    if (((u >> 6) & 0x3F) == 0) packed |= 2u;   // ~1/64
    if (((u >> 12) & 0x3F) == 0) packed |= 4u;  // ~1/64
    f = static_cast<uint8_t>(packed);
  }
  return micro_branch_reduction(std::span<const uint8_t>(flags));
}

BranchReductionResult micro_branch_reduction(std::span<const uint8_t> flags) {
  const std::size_t iterations = flags.size();
  BranchReductionResult r;
  {
    const int64_t start = now_ns();
    for (uint64_t i = 0; i < iterations; ++i) {
      const unsigned f = flags[i];
      if (f & 1u) {
        handle_error(r.branched_tally[0]);
      } else if (f & 2u) {
        handle_error(r.branched_tally[1]);
      } else if (f & 4u) {
        handle_error(r.branched_tally[2]);
      } else {
        ++r.branched_tally[3];
      }
    }
    do_not_optimize(r.branched_tally);
    const int64_t stop = now_ns();
    r.branched_ns = static_cast<double>(stop - start);
  }
  {
    const int64_t start = now_ns();
    for (uint64_t i = 0; i < iterations; ++i) {
      const unsigned f = flags[i];
      // Single hot-path test; anything unusual takes the cold dispatch.
      if (f == 0) {
        ++r.flagged_tally[3];
      } else {
        dispatch_flagged(f, r.flagged_tally);
      }
    }
    do_not_optimize(r.flagged_tally);
    const int64_t stop = now_ns();
    r.flagged_ns = static_cast<double>(stop - start);
  }
  r.results_equal = r.branched_tally == r.flagged_tally;
  return r;
}

namespace {

template <typename BumpFn>
double timed_counter_run(unsigned threads, uint64_t increments, BumpFn bump) {
  std::atomic<bool> start_flag{false};
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      while (!start_flag.load(std::memory_order_acquire)) std::this_thread::yield();
      for (uint64_t i = 0; i < increments; ++i) bump();
    });
  }
  const int64_t start = now_ns();
  start_flag.store(true, std::memory_order_release);
  for (auto& w : workers) w.join();
  const int64_t stop = now_ns();
  return static_cast<double>(stop - start);
}

}  // namespace

AtomicVsMutexResult micro_atomic_vs_mutex(unsigned threads, uint64_t increments) {
  AtomicVsMutexResult r;
  r.threads = threads;
  r.increments = increments;

  std::atomic<uint64_t> atomic_counter{0};
  r.atomic_ns = timed_counter_run(threads, increments, [&] {
    atomic_counter.fetch_add(1, std::memory_order_relaxed);
  });
  r.atomic_final = atomic_counter.load();

  uint64_t mutex_counter = 0;
  std::mutex mu;
  r.mutex_ns = timed_counter_run(threads, increments, [&] {
    std::lock_guard<std::mutex> lock(mu);
    ++mutex_counter;
  });
  r.mutex_final = mutex_counter;
  return r;
}

MixedPrecisionResult micro_mixed_precision(std::span<const float> inputs) {
  const std::size_t n = inputs.size();
  std::vector<float> mixed_out(n);
  std::vector<float> unmixed_out(n);

  MixedPrecisionResult r;
  {
    const int64_t start = now_ns();
    for (std::size_t i = 0; i < n; ++i) {
      // Double literal: the float operand is promoted, multiplied in double,
      // then the result is demoted back to float on assignment.
      mixed_out[i] = static_cast<float>(inputs[i] * 1.23);
    }
    auto* mixed_ptr = mixed_out.data();
    do_not_optimize(mixed_ptr);
    const int64_t stop = now_ns();
    r.mixed_ns = static_cast<double>(stop - start);
  }
  {
    const int64_t start = now_ns();
    for (std::size_t i = 0; i < n; ++i) {
      unmixed_out[i] = inputs[i] * 1.23f;
    }
    auto* unmixed_ptr = unmixed_out.data();
    do_not_optimize(unmixed_ptr);
    const int64_t stop = now_ns();
    r.unmixed_ns = static_cast<double>(stop - start);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = std::abs(static_cast<double>(mixed_out[i]) - unmixed_out[i]);
    r.max_abs_diff = std::max(r.max_abs_diff, diff);
  }
  return r;
}

MixedPrecisionResult micro_mixed_precision(uint64_t iterations, uint64_t seed) {
  core::Rng rng(seed);
  std::vector<float> inputs(iterations);
  for (auto& v : inputs) v = static_cast<float>(rng.next_unit() * 1000.0);
  return micro_mixed_precision(std::span<const float>(inputs));
}

}  // namespace bench
