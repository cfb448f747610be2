#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace ginimds {

/// Maximum number of worker threads library loops may use.
int max_threads();

/// Caps worker parallelism; n <= 0 restores the hardware default.
void set_max_threads(int n);

/// Runs body(i) for every i in [0, count). Work items are handed out
/// dynamically, so item i must not depend on any other item having run.
/// Outputs written by distinct items must not alias; under that contract
/// results are bit-identical for any thread count.
template <typename F>
void parallel_for(std::int64_t count, F&& body) {
  if (count <= 0) return;
  const int threads = static_cast<int>(std::min<std::int64_t>(max_threads(), count));
  if (threads <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count || failed.load(std::memory_order_relaxed)) return;
      try {
        body(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads) - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ginimds
