// sweep.hpp — deterministic index-based work distribution for grid sweeps
#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spinmech {

// Runs fn(i) for i = 0..n−1 across the requested number of worker threads
// (workers ≤ 0 selects the hardware concurrency). Each index is claimed
// atomically and writes only its own result slot, so the output is
// independent of worker count and scheduling order. The first exception
// thrown by a worker is rethrown after all workers join.
template <typename Fn>
void parallel_for_indexed(int n, int workers, Fn&& fn) {
  if (n <= 0) return;
  if (workers <= 0) workers = int(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > n) workers = n;
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace spinmech
