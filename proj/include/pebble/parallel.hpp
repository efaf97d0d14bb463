#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pebble {

inline unsigned default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous chunks of `chunk` items and hands them
/// to `threads` workers: fn(worker_index, begin, end). Workers pull chunks
/// dynamically, so fn must only write to per-item or per-worker state. The
/// first exception thrown by any worker is rethrown here.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned threads, std::size_t chunk, Fn&& fn) {
  if (count == 0) return;
  chunk = std::max<std::size_t>(chunk, 1);
  const std::size_t chunks = (count + chunk - 1) / chunk;
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, chunks));
  if (threads == 1) {
    fn(0u, std::size_t{0}, count);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t c = next++; c < chunks; c = next++) {
            const std::size_t begin = c * chunk;
            fn(w, begin, std::min(count, begin + chunk));
          }
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = chunks;
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace pebble
