#pragma once

#include <chrono>
#include <cstdint>
#include <string>

namespace bench {

inline int64_t now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Smallest positive delta observable between consecutive monotonic clock
// reads. Measured once per process and cached.
int64_t timer_resolution_ns();

// CPU model string from /proc/cpuinfo when obtainable, "unknown" otherwise.
std::string cpu_identifier();

// Compiler barrier: forces `value` to be materialized, keeping benchmark
// loops from being folded away. The operand is pinned to memory — a register
// alternative would let the optimizer clobber aggregates wider than a word.
template <typename T>
inline void do_not_optimize(T& value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : "+m"(value) : : "memory");
#else
  (void)value;
#endif
}

}  // namespace bench
