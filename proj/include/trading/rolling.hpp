#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace trading {

struct NonFiniteInput : std::invalid_argument {
  NonFiniteInput() : std::invalid_argument("rolling window rejects NaN/inf input") {}
};

struct WindowStats {
  double mean = 0;
  double stddev = 0;  // population form: sqrt(E[x^2] - mean^2)
};

// Fixed-capacity rolling window with O(1) mean/stddev per push.
//
// Accumulation happens in coordinates shifted by an anchor near the data
// location: raw second moments of data far from zero would lose the variance
// to cancellation. The anchor and both sums are rebuilt from the buffer every
// kRebuildInterval pushes, which bounds the rounding drift the evict/add
// updates accumulate.
class RollingStats {
 public:
  static constexpr uint32_t kRebuildInterval = 4096;

  explicit RollingStats(std::size_t window);

  // Returns stats over the stored window once it holds `capacity()` values,
  // nullopt while still warming up. Oldest value is evicted when full.
  std::optional<WindowStats> push(double value);

  std::size_t capacity() const { return buf_.size(); }
  std::size_t size() const { return count_; }
  bool full() const { return count_ == buf_.size(); }

  // Window contents in an unspecified order (for audits/recomputation).
  std::vector<double> window_snapshot() const;

 private:
  void rebuild_sums();

  std::vector<double> buf_;
  std::size_t write_ = 0;
  std::size_t count_ = 0;
  double anchor_ = 0;   // fixed shift applied to every accumulated value
  double sum_ = 0;      // running sum of (value - anchor)
  double sum_sq_ = 0;   // running sum of (value - anchor)^2
  uint32_t pushes_since_rebuild_ = 0;
};

}  // namespace trading
