#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace qf {

inline int default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, total) into contiguous chunks and runs fn(begin, end) on up to
/// `workers` threads. Results come back in range order, so concatenating
/// them is independent of the worker count.
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::uint64_t total, int workers, Fn fn) {
  workers = std::max(1, workers);
  const std::uint64_t chunk_count =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 64));
  std::vector<Result> results(chunk_count);
  auto range_of = [&](std::uint64_t c) {
    return std::pair{total * c / chunk_count, total * (c + 1) / chunk_count};
  };
  if (workers == 1 || chunk_count == 1) {
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
      auto [b, e] = range_of(c);
      results[c] = fn(b, e);
    }
    return results;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t c; (c = next.fetch_add(1)) < chunk_count;) {
        auto [b, e] = range_of(c);
        results[c] = fn(b, e);
      }
    });
  }
  pool.clear();
  return results;
}

}  // namespace qf
