#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lsplacto {

/// Runs body(i) for i in [0, count) on up to `threads` workers.  Workers
/// take contiguous blocks, so callers writing into slot i of a preallocated
/// vector get the same output for any thread count.  The first exception
/// thrown by a worker is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, std::size_t threads, Body &&body) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t block = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        const std::size_t end = std::min(count, (t + 1) * block);
        for (std::size_t i = t * block; i < end; ++i)
          body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto &w : workers)
    w.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace lsplacto
