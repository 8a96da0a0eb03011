#pragma once

#include <algorithm>
#include <atomic>
#include <thread>

namespace klee::app {

template <typename T>
std::vector<CellOutcome<T>> parallelMap(std::size_t count, int jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<CellOutcome<T>> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i].value.emplace(fn(i));
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(1, jobs), count);
  if (threads <= 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace klee::app
