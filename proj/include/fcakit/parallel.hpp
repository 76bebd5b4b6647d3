#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace fca {

inline int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Runs fn(i) for i in [0, count) on `jobs` threads (0 = hardware default).
// fn must be thread-safe and must not throw.
template <typename Fn>
void parallel_for(std::uint64_t count, int jobs, Fn&& fn) {
  if (jobs <= 0) jobs = default_jobs();
  constexpr std::uint64_t kChunk = 64;
  if (jobs == 1 || count <= kChunk) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      std::uint64_t lo = next.fetch_add(kChunk, std::memory_order_relaxed);
      if (lo >= count) return;
      std::uint64_t hi = std::min(lo + kChunk, count);
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(jobs - 1));
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

}  // namespace fca
