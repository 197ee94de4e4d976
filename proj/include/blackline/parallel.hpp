#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace blackline {

inline int hardware_workers(int cap = 16) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return n < cap ? n : cap;
}

// Runs fn(index, thread_slot) for index in [0, n) with static contiguous
// chunking. Each index is visited exactly once by exactly one thread, so
// writes to disjoint per-index data need no synchronization. thread_slot is
// in [0, nthreads) and can address per-thread scratch.
template <class Fn>
void parallel_for(std::size_t n, int nthreads, Fn&& fn) {
  if (n == 0) return;
  if (nthreads < 1) nthreads = 1;
  std::size_t t = static_cast<std::size_t>(nthreads);
  if (t > n) t = n;
  if (t == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i, 0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(t);
  for (std::size_t k = 0; k < t; ++k) {
    const std::size_t lo = n * k / t;
    const std::size_t hi = n * (k + 1) / t;
    threads.emplace_back([lo, hi, k, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i, static_cast<int>(k));
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace blackline
