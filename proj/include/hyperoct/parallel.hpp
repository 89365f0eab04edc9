#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hyperoct {

/// Worker count: hardware concurrency, capped by the HC_THREADS environment
/// variable when it holds a positive integer.
inline unsigned workerCount() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("HC_THREADS")) {
    try {
      long value = std::stol(cap);
      if (value > 0) workers = std::min<unsigned>(workers, unsigned(value));
    } catch (const std::exception&) {
    }
  }
  return workers;
}

/// Runs task(i) for i in [0, count) on up to workerCount() threads. Tasks must
/// only write to state owned by their index.
template <class Task>
void parallelFor(int count, Task task) {
  const unsigned workers =
      std::min<unsigned>(workerCount(), unsigned(std::max(count, 1)));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (int i = next++; i < count; i = next++) task(i);
        } catch (...) {
          std::lock_guard lock(failureMutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hyperoct
