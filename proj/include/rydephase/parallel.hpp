#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rydephase {

struct Parallelism {
  unsigned threads = 1;
};

// Calls body(i) for i in [0, count). Indices are dealt out in contiguous
// blocks; body must only write to slots owned by i. The first exception
// thrown by any worker is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Parallelism par, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, par.threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      pool.emplace_back([&, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rydephase
