#include "trading/rolling.hpp"

#include <cmath>

namespace trading {

RollingStats::RollingStats(std::size_t window) : buf_(window, 0.0) {
  if (window == 0) throw std::invalid_argument("rolling window must hold at least one value");
}

std::optional<WindowStats> RollingStats::push(double value) {
  if (!std::isfinite(value)) throw NonFiniteInput();

  if (count_ == 0) anchor_ = value;  // first value pins the shift near the data

  if (count_ == buf_.size()) {
    // The shifted value removed here is bit-identical to the one added when
    // this slot was pushed, because the anchor only changes on a rebuild
    // (which recomputes both sums under the new anchor anyway).
    const double evicted = buf_[write_] - anchor_;
    sum_ -= evicted;
    sum_sq_ -= evicted * evicted;
  } else {
    ++count_;
  }
  buf_[write_] = value;
  write_ = (write_ + 1) % buf_.size();
  const double shifted = value - anchor_;
  sum_ += shifted;
  sum_sq_ += shifted * shifted;

  if (++pushes_since_rebuild_ >= kRebuildInterval) {
    rebuild_sums();
    pushes_since_rebuild_ = 0;
  }

  if (count_ < buf_.size()) return std::nullopt;
  const double n = static_cast<double>(count_);
  const double mean_shifted = sum_ / n;
  const double var = sum_sq_ / n - mean_shifted * mean_shifted;
  return WindowStats{anchor_ + mean_shifted, std::sqrt(var > 0 ? var : 0.0)};
}

void RollingStats::rebuild_sums() {
  double raw_sum = 0;
  for (std::size_t i = 0; i < count_; ++i) raw_sum += buf_[i];
  anchor_ = raw_sum / static_cast<double>(count_);
  double s = 0, sq = 0;
  for (std::size_t i = 0; i < count_; ++i) {
    const double v = buf_[i] - anchor_;
    s += v;
    sq += v * v;
  }
  sum_ = s;
  sum_sq_ = sq;
}

std::vector<double> RollingStats::window_snapshot() const {
  return std::vector<double>(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(count_));
}

}  // namespace trading
