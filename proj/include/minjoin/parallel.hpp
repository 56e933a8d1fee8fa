#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace minjoin {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(begin, end) over a static split of [0, n) into at most `threads`
// contiguous chunks. The split depends only on (n, threads), so any writes
// the body makes to index-addressed slots land identically regardless of
// scheduling. The first raised exception is rethrown on the caller.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  threads = resolve_threads(threads);
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    body(std::size_t{0}, n);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(threads, n);
  const std::size_t base = n / chunks;
  const std::size_t extra = n % chunks;

  std::vector<std::thread> pool;
  pool.reserve(chunks - 1);
  std::exception_ptr first_error;
  std::mutex error_lock;

  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t end = begin + base + (c < extra ? 1 : 0);
    auto run = [&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        const std::lock_guard<std::mutex> hold(error_lock);
        if (!first_error) first_error = std::current_exception();
      }
    };
    if (c + 1 == chunks) {
      run();
    } else {
      pool.emplace_back(run);
    }
    begin = end;
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace minjoin
