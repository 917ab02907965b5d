#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace trigirth::detail {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. fn returns true to
/// signal a stop; indices above the smallest stopping index may be skipped,
/// but every index below it is always run, so the smallest stopping index is
/// independent of `jobs`. Returns that index, or `count` if none stopped.
template <class Fn>
std::size_t run_indexed(std::size_t count, unsigned jobs, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_stop{count};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      if (i > first_stop.load()) continue;
      try {
        if (fn(i)) {
          std::size_t cur = first_stop.load();
          while (i < cur && !first_stop.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        first_stop.store(0);
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return first_stop.load();
}

}  // namespace trigirth::detail
