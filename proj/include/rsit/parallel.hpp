#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rsit {

inline int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs job(i) for i in [0, n) on up to `workers` threads and returns the
/// results in index order. Jobs must not share mutable state; the output is
/// then independent of the worker count. The first exception thrown by a job
/// is rethrown after all threads have joined.
template <typename Result, typename Job>
std::vector<Result> parallel_map(std::size_t n, int workers, Job job) {
  std::vector<Result> out(n);
  const std::size_t nt = std::min<std::size_t>(std::max(workers, 1), n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = job(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        out[i] = job(i);
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace rsit
