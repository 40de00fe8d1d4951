#include "bench/timing.hpp"

#include <algorithm>
#include <fstream>

namespace bench {

namespace {

int64_t measure_timer_resolution() {
  int64_t best = INT64_MAX;
  for (int probe = 0; probe < 256; ++probe) {
    const int64_t t0 = now_ns();
    int64_t t1 = now_ns();
    while (t1 == t0) t1 = now_ns();
    best = std::min(best, t1 - t0);
  }
  return best;
}

}  // namespace

int64_t timer_resolution_ns() {
  static const int64_t resolution = measure_timer_resolution();
  return resolution;
}

std::string cpu_identifier() {
  std::ifstream cpuinfo("/proc/cpuinfo");
  std::string line;
  while (std::getline(cpuinfo, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        auto name = line.substr(colon + 1);
        const auto start = name.find_first_not_of(" \t");
        return start == std::string::npos ? name : name.substr(start);
      }
    }
  }
  return "unknown";
}

}  // namespace bench
