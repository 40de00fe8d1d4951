#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>

namespace disruptor {

inline constexpr std::size_t kCacheLineSize = 64;

// One monotonic publish/consume cursor. Internally a signed counter starting
// at -1 ("nothing yet"); externally exposed as a count of events. Aligned and
// padded to a full cache line so the producer's and consumer's cursors never
// share one (false-sharing isolation).
class alignas(kCacheLineSize) Sequence {
 public:
  static constexpr int64_t kInitial = -1;

  Sequence() noexcept = default;

  int64_t load_acquire() const noexcept {
    return value_.load(std::memory_order_acquire);
  }

  int64_t load_relaxed() const noexcept {
    return value_.load(std::memory_order_relaxed);
  }

  // Callers only ever move the cursor forward; release pairs with the
  // acquire loads above to publish everything written before the store.
  void store_release(int64_t value) noexcept {
    value_.store(value, std::memory_order_release);
  }

  // Number of events at or below the cursor.
  uint64_t count() const noexcept {
    return static_cast<uint64_t>(load_acquire() + 1);
  }

 private:
  std::atomic<int64_t> value_{kInitial};
  char pad_[kCacheLineSize - sizeof(std::atomic<int64_t>)];
};

static_assert(sizeof(Sequence) == kCacheLineSize);
static_assert(alignof(Sequence) == kCacheLineSize);
static_assert(std::atomic<int64_t>::is_always_lock_free);

}  // namespace disruptor
