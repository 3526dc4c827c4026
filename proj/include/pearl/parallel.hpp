#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace pearl {

/// Worker count: an explicit override, else PEARL_THREADS, else the hardware
/// concurrency.
int thread_count();

/// Override the worker count (0 restores the environment default).
void set_thread_count(int n);

/// Runs f(0..n-1), possibly across threads. Callers write results into
/// per-index slots, so the outcome never depends on scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const int workers = thread_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
  };
  std::vector<std::thread> pool;
  const std::size_t spawn = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace pearl
