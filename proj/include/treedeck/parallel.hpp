#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "treedeck/limits.hpp"

namespace treedeck {

/// Runs body(begin, end, worker) over contiguous chunks of [0, count).
/// Chunks are handed out dynamically; callers write results by index so the
/// outcome does not depend on scheduling.
template <typename Body>
void parallel_chunks(std::size_t count, std::size_t chunk, Parallelism par, Body&& body) {
  if (count == 0) return;
  chunk = std::max<std::size_t>(chunk, 1);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(par.workers(), (count + chunk - 1) / chunk));
  if (workers <= 1) {
    for (std::size_t b = 0; b < count; b += chunk) body(b, std::min(count, b + chunk), 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t b = next.fetch_add(chunk);
          if (b >= count) break;
          body(b, std::min(count, b + chunk), w);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace treedeck
