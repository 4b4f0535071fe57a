#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace prodpart {

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Evaluates fn(i) for i in [first, last] on up to `jobs` threads and
/// returns the results in index order. The first exception thrown by any
/// worker is rethrown once all workers have stopped.
template <class Fn>
auto parallel_map(std::uint64_t first, std::uint64_t last, unsigned jobs, Fn fn)
    -> std::vector<std::invoke_result_t<Fn&, std::uint64_t>> {
  using Result = std::invoke_result_t<Fn&, std::uint64_t>;
  if (first > last) return {};
  const std::uint64_t count = last - first + 1;
  std::vector<Result> out(count);

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::uint64_t i = next++; i < count && !failed; i = next++) {
      try {
        out[i] = fn(first + i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };

  const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, jobs), count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace prodpart
