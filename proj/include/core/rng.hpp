#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace core {

// xorshift64* pseudo-random generator (Marsaglia's xorshift with Vigna's
// output multiplier). Chosen over std::mt19937 so the stream is defined by a
// three-line recurrence that reproduces across languages and toolchains:
//
//   s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;
//   output = s * 2685821657736338717
//
// with 64-bit wrapping arithmetic and any nonzero starting state. A zero seed
// is remapped to 0x9E3779B97F4A7C15 because the all-zero state is a fixed
// point of the recurrence.
class Rng {
 public:
  explicit Rng(uint64_t seed) noexcept
      : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ULL) {}

  uint64_t next_u64() noexcept {
    uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 2685821657736338717ULL;
  }

  // Uniform draw in (0, 1]: the top 53 bits of the output, shifted away from
  // zero so log() below never sees 0.
  double next_unit() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
  }

  // Standard normal via Box-Muller; the sine partner of each pair is cached
  // and returned on the following call.
  double next_gaussian() noexcept {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Uniform integer in [0, bound) by rejection, bias-free. bound must be > 0.
  uint64_t next_below(uint64_t bound) noexcept {
    const uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
      const uint64_t v = next_u64();
      if (v < limit) return v % bound;
    }
  }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace core
