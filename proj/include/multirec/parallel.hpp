#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace multirec {

inline unsigned resolveWorkers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, n). Results go to caller-owned slots, so output
// order never depends on scheduling.
template <class F>
void parallelFor(std::size_t n, unsigned workers, F&& fn) {
  const unsigned w = std::min<std::size_t>(resolveWorkers(workers), std::max<std::size_t>(n, 1));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureLock;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failureLock);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

template <class T, class F>
std::vector<T> parallelMap(std::size_t n, unsigned workers, F&& fn) {
  std::vector<T> out(n);
  parallelFor(n, workers, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace multirec
