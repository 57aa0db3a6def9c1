#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace splitnlc {

/// Runs `task(i)` for i in [0, count) on up to `n_threads` workers.
/// Tasks must be independent; result ordering is the caller's index space,
/// so output stays deterministic regardless of completion order.
inline void parallel_for(std::size_t count, unsigned n_threads,
                         const std::function<void(std::size_t)>& task) {
  if (count == 0) return;
  if (n_threads == 0) n_threads = std::thread::hardware_concurrency();
  n_threads = std::max(1u, std::min<unsigned>(n_threads, count));
  if (n_threads == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        task(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace splitnlc
