#pragma once

#include <stdexcept>
#include <string>

namespace trading {

struct ZeroStdDev : std::domain_error {
  ZeroStdDev() : std::domain_error("z-score undefined for zero standard deviation") {}
};

enum class Signal {
  OpenShortSpread,  // short leg A, long leg B
  OpenLongSpread,   // long leg A, short leg B
  ClosePositions,
  Hold,
};

inline std::string to_string(Signal s) {
  switch (s) {
    case Signal::OpenShortSpread: return "open_short_spread";
    case Signal::OpenLongSpread: return "open_long_spread";
    case Signal::ClosePositions: return "close_positions";
    case Signal::Hold: return "hold";
  }
  return "hold";
}

inline double zscore(double value, double mean, double stddev) {
  if (!(stddev > 0)) throw ZeroStdDev();
  return (value - mean) / stddev;
}

// Threshold rules with strict comparisons; boundary values are neutral.
// Entries while a position is open and exits while flat degrade to Hold,
// so the caller never has to special-case pyramiding or empty closes.
inline Signal signal_from_z(double z, bool has_position,
                            double open_threshold = 1.0, double close_threshold = 0.8) {
  if (has_position) {
    if (z < close_threshold && z > -close_threshold) return Signal::ClosePositions;
    return Signal::Hold;
  }
  if (z > open_threshold) return Signal::OpenShortSpread;
  if (z < -open_threshold) return Signal::OpenLongSpread;
  return Signal::Hold;
}

}  // namespace trading
