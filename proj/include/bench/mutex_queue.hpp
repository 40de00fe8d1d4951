#pragma once

#include <condition_variable>
#include <mutex>
#include <optional>
#include <queue>
#include <utility>

namespace bench {

// Lock-based FIFO baseline: unbounded queue guarded by one mutex plus a
// condition-variable wakeup, with a done flag for shutdown. The contrast
// case for the lock-free pipeline; pop takes one element per lock
// acquisition and keeps returning queued elements after set_done so every
// pushed value is popped exactly once before shutdown completes.
template <typename T>
class MutexQueue {
 public:
  void push(T value) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      queue_.push(std::move(value));
    }
    cv_.notify_one();
  }

  // Blocks until an element is available or done is set; nullopt only once
  // done is set and the queue has drained.
  std::optional<T> pop() {
    std::unique_lock<std::mutex> lock(mutex_);
    cv_.wait(lock, [&] { return !queue_.empty() || done_; });
    if (queue_.empty()) return std::nullopt;
    T value = std::move(queue_.front());
    queue_.pop();
    return value;
  }

  void set_done() {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      done_ = true;
    }
    cv_.notify_all();
  }

 private:
  std::queue<T> queue_;
  std::mutex mutex_;
  std::condition_variable cv_;
  bool done_ = false;
};

}  // namespace bench
