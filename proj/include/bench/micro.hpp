#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace bench {

struct NotMultipleOfFour : std::invalid_argument {
  explicit NotMultipleOfFour(uint64_t n)
      : std::invalid_argument("count must be a multiple of four, got " + std::to_string(n)) {}
};

enum class TraversalOrder { Sequential, Random };

// Sums a seeded array in the given traversal order. Both orders visit every
// element exactly once, so the checksum (the sum itself) must not depend on
// the order; only the timing does.
struct CachePatternResult {
  std::size_t size = 0;
  TraversalOrder order = TraversalOrder::Sequential;
  double elapsed_ns = 0;
  uint64_t checksum = 0;
};
CachePatternResult micro_cache_pattern(std::size_t size, TraversalOrder order, uint64_t seed);

// Sums 0..n-1 with a plain loop and with a four-way unrolled loop
// (result += i + (i+1) + (i+2) + (i+3)); the two sums must be equal.
struct LoopUnrollResult {
  double scalar_ns = 0;
  double unrolled_ns = 0;
  uint64_t scalar_sum = 0;
  uint64_t unrolled_sum = 0;
};
LoopUnrollResult micro_loop_unrolling(uint64_t n);  // n mod 4 == 0

// Evaluates two-term conjunctions with an instrumented expensive second
// predicate, eagerly (both terms always evaluated) vs short-circuit. The
// truth tallies must match; the short-circuit form must evaluate the second
// predicate only when the first term is true.
struct ShortCircuitResult {
  double eager_ns = 0;
  double short_ns = 0;
  uint64_t eager_evals = 0;
  uint64_t short_evals = 0;
  uint64_t eager_true = 0;
  uint64_t short_true = 0;
};
ShortCircuitResult micro_short_circuit(uint64_t iterations, uint64_t seed,
                                       double first_true_fraction = 0.5);
ShortCircuitResult micro_short_circuit(std::span<const uint8_t> first_terms);

// Dispatches seeded error conditions through an if/else-if chain vs a single
// flag test with a cold handler. Outcome tallies (handler A/B/C, hotpath)
// must be identical.
struct BranchReductionResult {
  double branched_ns = 0;
  double flagged_ns = 0;
  bool results_equal = false;
  std::array<uint64_t, 4> branched_tally{};  // A, B, C, hotpath
  std::array<uint64_t, 4> flagged_tally{};
};
BranchReductionResult micro_branch_reduction(uint64_t iterations, uint64_t seed);
// Caller-supplied condition bytes (bit0 = A, bit1 = B, bit2 = C, 0 = clean).
BranchReductionResult micro_branch_reduction(std::span<const uint8_t> flags);

// threads incrementer threads bump a shared counter `increments` times each,
// once with an atomic, once under a mutex. Both finals must equal
// threads * increments (zero threads is legal and yields zero).
struct AtomicVsMutexResult {
  unsigned threads = 0;
  uint64_t increments = 0;
  double atomic_ns = 0;
  double mutex_ns = 0;
  uint64_t atomic_final = 0;
  uint64_t mutex_final = 0;
};
AtomicVsMutexResult micro_atomic_vs_mutex(unsigned threads, uint64_t increments);

// Multiplies single-precision inputs by the constant 1.23 written as a
// double literal (promote/demote round trip) vs as 1.23f. Timing and the
// maximum absolute result difference are informational.
struct MixedPrecisionResult {
  double mixed_ns = 0;
  double unmixed_ns = 0;
  double max_abs_diff = 0;
};
MixedPrecisionResult micro_mixed_precision(std::span<const float> inputs);
MixedPrecisionResult micro_mixed_precision(uint64_t iterations, uint64_t seed);

}  // namespace bench
