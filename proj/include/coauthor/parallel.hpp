#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coauthor {

// 0 means "one worker per hardware thread".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into `block_count` contiguous blocks whose boundaries
/// depend only on count and block_count, never on the worker count.
struct BlockRange {
  std::size_t begin;
  std::size_t end;
};

inline BlockRange block_range(std::size_t count, std::size_t block_count, std::size_t block) {
  const std::size_t base = count / block_count;
  const std::size_t extra = count % block_count;
  const std::size_t begin = block * base + std::min(block, extra);
  return {begin, begin + base + (block < extra ? 1 : 0)};
}

/// Runs fn(block) for every block in [0, block_count) on up to `threads`
/// workers. Blocks are claimed dynamically; callers that reduce results must
/// store them per block and combine in block order to stay deterministic.
/// The first exception thrown by any block is rethrown on the caller.
template <typename Fn>
void parallel_blocks(std::size_t block_count, unsigned threads, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), block_count));
  if (workers <= 1) {
    for (std::size_t b = 0; b < block_count; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= block_count) return;
      try {
        fn(b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(block_count);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace coauthor
