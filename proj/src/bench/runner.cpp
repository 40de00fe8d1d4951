#include "bench/runner.hpp"

#include <thread>

#include "bench/mutex_queue.hpp"
#include "bench/timing.hpp"
#include "disruptor/ring_buffer.hpp"

namespace bench {

uint64_t fnv1a(uint64_t hash, const char* data, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= static_cast<unsigned char>(data[i]);
    hash *= 1099511628211ULL;
  }
  return hash;
}

uint64_t expected_label_checksum(uint64_t num_events) {
  uint64_t hash = kFnvOffsetBasis;
  for (uint64_t i = 0; i < num_events; ++i) {
    const std::string label = "Event " + std::to_string(i);
    hash = fnv1a(hash, label.data(), label.size());
  }
  return hash;
}

namespace {

struct ConsumerChecksum {
  uint64_t hash = kFnvOffsetBasis;
  uint64_t count = 0;

  void fold(const std::string& payload) {
    hash = fnv1a(hash, payload.data(), payload.size());
    ++count;
  }

  bool matches(uint64_t expected_hash, uint64_t expected_count) const {
    return count == expected_count && hash == expected_hash;
  }
};

Sample time_disruptor_once(uint32_t repetition, const BenchConfig& config, uint64_t expected) {
  disruptor::RingBuffer<std::string> ring(disruptor::ring_capacity_for(config.num_events),
                                          config.wait_strategy);
  ConsumerChecksum check;
  auto processor = ring.processor();
  std::thread consumer([&] { processor.run([&](std::string& e) { check.fold(e); }); });

  const int64_t start = now_ns();
  auto producer = ring.producer();
  for (uint64_t i = 0; i < config.num_events; ++i) {
    const auto seq = producer.claim_next();
    producer.publish(*seq, "Event " + std::to_string(i));
  }
  ring.stop();
  consumer.join();
  const int64_t stop = now_ns();

  return {repetition, static_cast<double>(stop - start),
          check.matches(expected, config.num_events)};
}

Sample time_queue_once(uint32_t repetition, const BenchConfig& config, uint64_t expected) {
  MutexQueue<std::string> queue;
  ConsumerChecksum check;
  std::thread consumer([&] {
    while (auto event = queue.pop()) check.fold(*event);
  });

  const int64_t start = now_ns();
  for (uint64_t i = 0; i < config.num_events; ++i) {
    queue.push("Event " + std::to_string(i));
  }
  queue.set_done();
  consumer.join();
  const int64_t stop = now_ns();

  return {repetition, static_cast<double>(stop - start),
          check.matches(expected, config.num_events)};
}

template <typename TimeOnce>
RunSamples run_bench(const BenchConfig& config, TimeOnce&& time_once) {
  config.validate();
  const uint64_t expected = expected_label_checksum(config.num_events);
  for (uint32_t w = 0; w < config.warmup_runs; ++w) {
    (void)time_once(0, config, expected);
  }
  RunSamples run;
  run.samples.reserve(config.repetitions);
  for (uint32_t rep = 0; rep < config.repetitions; ++rep) {
    run.samples.push_back(time_once(rep, config, expected));
  }
  return run;
}

}  // namespace

RunSamples run_disruptor_bench(const BenchConfig& config) {
  return run_bench(config, time_disruptor_once);
}

RunSamples run_queue_bench(const BenchConfig& config) {
  return run_bench(config, time_queue_once);
}

}  // namespace bench
