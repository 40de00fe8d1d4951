#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string_view>
#include <thread>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif

namespace disruptor {

enum class WaitKind : uint8_t { BusySpin, Yield, SleepBackoff };

// Policy for how a blocked party (producer on a full buffer, consumer on an
// empty one) waits. Affects latency/CPU trade-off only; never ordering or
// visibility of events.
struct WaitStrategy {
  WaitKind kind = WaitKind::Yield;
  // Busy spins before escalating to yield (Yield) or sleep (SleepBackoff).
  uint32_t spin_iterations = 100;
  // Sleep length per wait round once SleepBackoff escalates.
  std::chrono::nanoseconds sleep_quantum = std::chrono::microseconds(100);

  static WaitStrategy busy_spin() noexcept { return {WaitKind::BusySpin, 100, {}}; }
  static WaitStrategy yielding() noexcept { return WaitStrategy{}; }
  static WaitStrategy sleep_backoff() noexcept { return {WaitKind::SleepBackoff, 100, std::chrono::microseconds(100)}; }
};

constexpr std::string_view to_string(WaitKind kind) noexcept {
  switch (kind) {
    case WaitKind::BusySpin: return "spin";
    case WaitKind::Yield: return "yield";
    case WaitKind::SleepBackoff: return "sleep";
  }
  return "unknown";
}

inline void cpu_pause() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  _mm_pause();
#else
  std::atomic_signal_fence(std::memory_order_seq_cst);
#endif
}

// Per-wait escalation state: busy-spin first, then yield or sleep per the
// strategy. One instance per blocking episode; reset() after progress.
class SpinWait {
 public:
  explicit SpinWait(const WaitStrategy& strategy) noexcept : strategy_(strategy) {}

  void wait_once() {
    if (strategy_.kind == WaitKind::BusySpin || spins_ < strategy_.spin_iterations) {
      ++spins_;
      cpu_pause();
      return;
    }
    if (strategy_.kind == WaitKind::Yield) {
      std::this_thread::yield();
      return;
    }
    std::this_thread::sleep_for(strategy_.sleep_quantum);
  }

  void reset() noexcept { spins_ = 0; }

 private:
  WaitStrategy strategy_;
  uint32_t spins_ = 0;
};

}  // namespace disruptor
