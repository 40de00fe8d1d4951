#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "disruptor/sequence.hpp"
#include "disruptor/wait_strategy.hpp"

namespace disruptor {

struct CapacityZero : std::invalid_argument {
  CapacityZero() : std::invalid_argument("ring capacity must be positive") {}
};

struct CapacityNotPowerOfTwo : std::invalid_argument {
  explicit CapacityNotPowerOfTwo(std::size_t capacity)
      : std::invalid_argument("ring capacity must be a power of two, got " +
                              std::to_string(capacity)) {}
};

struct OutOfOrderPublish : std::logic_error {
  OutOfOrderPublish(uint64_t sequence, int64_t cursor)
      : std::logic_error("publish(" + std::to_string(sequence) +
                         ") out of order: cursor is at " + std::to_string(cursor)) {}
};

template <typename T>
class Producer;
template <typename T>
class SequenceBarrier;
template <typename T>
class EventProcessor;

// Bounded single-producer/single-consumer event pipeline. All slots are
// allocated once at construction; publish/consume never allocate or lock.
// Coordination is two cache-line-isolated cursors: `cursor` (highest
// published) advanced by the producer with release semantics, `gating`
// (highest consumed) advanced by the consumer. The producer stalls while
// next - gating > capacity, so an unconsumed slot is never overwritten.
template <typename T>
class RingBuffer {
 public:
  explicit RingBuffer(std::size_t capacity, WaitStrategy wait = WaitStrategy{})
      : capacity_(checked(capacity)), mask_(capacity - 1), wait_(wait), slots_(capacity) {}

  RingBuffer(const RingBuffer&) = delete;
  RingBuffer& operator=(const RingBuffer&) = delete;

  std::size_t capacity() const noexcept { return capacity_; }
  const WaitStrategy& wait_strategy() const noexcept { return wait_; }

  uint64_t published_count() const noexcept { return cursor_.count(); }
  uint64_t consumed_count() const noexcept { return gating_.count(); }

  // Cooperative shutdown: waiting calls return instead of blocking further,
  // and a running processor drains what is already published, then exits.
  // Callable from any thread; idempotent.
  void stop() noexcept { stopped_.store(true, std::memory_order_release); }
  bool stop_requested() const noexcept { return stopped_.load(std::memory_order_acquire); }

  Producer<T> producer() noexcept { return Producer<T>(*this); }
  EventProcessor<T> processor() noexcept { return EventProcessor<T>(*this); }
  SequenceBarrier<T> barrier() noexcept { return SequenceBarrier<T>(*this); }

  // Read access to a published slot (sequence must be <= published cursor).
  const T& at(uint64_t sequence) const noexcept {
    return slots_[sequence & mask_];
  }

 private:
  friend class Producer<T>;
  friend class SequenceBarrier<T>;
  friend class EventProcessor<T>;

  static std::size_t checked(std::size_t capacity) {
    if (capacity == 0) throw CapacityZero();
    if (!std::has_single_bit(capacity)) throw CapacityNotPowerOfTwo(capacity);
    return capacity;
  }

  const std::size_t capacity_;
  const std::size_t mask_;
  const WaitStrategy wait_;
  std::vector<T> slots_;
  Sequence cursor_;   // highest published
  Sequence gating_;   // highest consumed
  std::atomic<bool> stopped_{false};
};

// Single-thread producer handle. Claim a sequence, write the event, publish.
template <typename T>
class Producer {
 public:
  explicit Producer(RingBuffer<T>& ring) noexcept : ring_(&ring) {}

  // Next unclaimed sequence. Blocks per the wait strategy while the buffer is
  // full (claim would lap the consumer); nullopt if stop() arrives while
  // waiting and the buffer is still full.
  std::optional<uint64_t> claim_next() {
    const int64_t next = claimed_ + 1;
    const int64_t wrap = next - static_cast<int64_t>(ring_->capacity_);
    if (wrap > cached_gating_) {
      SpinWait waiter(ring_->wait_);
      for (;;) {
        cached_gating_ = ring_->gating_.load_acquire();
        if (wrap <= cached_gating_) break;
        if (ring_->stop_requested()) {
          cached_gating_ = ring_->gating_.load_acquire();
          if (wrap <= cached_gating_) break;
          return std::nullopt;
        }
        waiter.wait_once();
      }
    }
    claimed_ = next;
    return static_cast<uint64_t>(next);
  }

  // Non-blocking claim: nullopt while the buffer is full.
  std::optional<uint64_t> try_claim() noexcept {
    const int64_t next = claimed_ + 1;
    const int64_t wrap = next - static_cast<int64_t>(ring_->capacity_);
    if (wrap > cached_gating_) {
      cached_gating_ = ring_->gating_.load_acquire();
      if (wrap > cached_gating_) return std::nullopt;
    }
    claimed_ = next;
    return static_cast<uint64_t>(next);
  }

  // Store the event in the claimed slot and advance the cursor with release
  // semantics: any thread that reads cursor >= sequence afterwards observes
  // the slot contents. Sequences must be published in claim order.
  void publish(uint64_t sequence, T event) {
    const int64_t seq = static_cast<int64_t>(sequence);
    const int64_t expected = ring_->cursor_.load_relaxed() + 1;
    if (seq != expected || seq > claimed_) {
      throw OutOfOrderPublish(sequence, expected - 1);
    }
    ring_->slots_[sequence & ring_->mask_] = std::move(event);
    ring_->cursor_.store_release(seq);
  }

 private:
  RingBuffer<T>* ring_;
  int64_t claimed_ = Sequence::kInitial;
  int64_t cached_gating_ = Sequence::kInitial;
};

// Consumer-side view of the publish cursor plus the stop flag.
template <typename T>
class SequenceBarrier {
 public:
  explicit SequenceBarrier(RingBuffer<T>& ring) noexcept : ring_(&ring) {}

  // Highest published sequence >= wanted, enabling batch consumption of
  // [wanted, result]. Acquire pairs with publish's release. nullopt once
  // stop() is set and nothing at or above `wanted` was published: the final
  // cursor re-read after observing the stop flag is what makes drain-on-stop
  // deterministic (everything published before stop() is visible to it).
  std::optional<uint64_t> wait_for(uint64_t wanted) {
    const int64_t want = static_cast<int64_t>(wanted);
    SpinWait waiter(ring_->wait_);
    for (;;) {
      const int64_t available = ring_->cursor_.load_acquire();
      if (available >= want) return static_cast<uint64_t>(available);
      if (ring_->stop_requested()) {
        const int64_t last = ring_->cursor_.load_acquire();
        if (last >= want) return static_cast<uint64_t>(last);
        return std::nullopt;
      }
      waiter.wait_once();
    }
  }

 private:
  RingBuffer<T>* ring_;
};

// Single-thread consumer handle: batch event loop over the barrier.
template <typename T>
class EventProcessor {
 public:
  explicit EventProcessor(RingBuffer<T>& ring) noexcept : ring_(&ring) {}

  // Invokes handler exactly once per published event, in sequence order,
  // batching [next, available] between waits and advancing the gating cursor
  // after each batch. Returns after stop() with all published events
  // consumed. Handler exceptions abort the loop and propagate.
  template <typename Handler>
  void run(Handler&& handler) {
    SequenceBarrier<T> barrier(*ring_);
    int64_t next = ring_->gating_.load_relaxed() + 1;
    for (;;) {
      const auto available = barrier.wait_for(static_cast<uint64_t>(next));
      if (!available) return;
      const int64_t high = static_cast<int64_t>(*available);
      for (int64_t seq = next; seq <= high; ++seq) {
        handler(ring_->slots_[static_cast<uint64_t>(seq) & ring_->mask_]);
      }
      ring_->gating_.store_release(high);
      next = high + 1;
    }
  }

  // Non-blocking single step: handles whatever is already published (one
  // batch) and advances the gating cursor. Returns the number of events
  // handled, 0 when nothing new is available.
  template <typename Handler>
  std::size_t poll(Handler&& handler) {
    const int64_t available = ring_->cursor_.load_acquire();
    const int64_t next = ring_->gating_.load_relaxed() + 1;
    if (available < next) return 0;
    for (int64_t seq = next; seq <= available; ++seq) {
      handler(ring_->slots_[static_cast<uint64_t>(seq) & ring_->mask_]);
    }
    ring_->gating_.store_release(available);
    return static_cast<std::size_t>(available - next + 1);
  }

  void stop() noexcept { ring_->stop(); }

 private:
  RingBuffer<T>* ring_;
};

// Smallest valid ring capacity that fits `requested` events, saturating at
// `cap` slots (backpressure engages above that).
inline std::size_t ring_capacity_for(uint64_t requested, std::size_t cap = 65536) {
  const uint64_t wanted = std::min<uint64_t>(requested == 0 ? 1 : requested, cap);
  return std::bit_ceil(wanted);
}

}  // namespace disruptor
