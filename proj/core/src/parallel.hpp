#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cyldom::detail {

// Runs fn(begin, end) on contiguous blocks of [0, count). Blocks are assigned
// statically so every index is handled by exactly one worker.
template <class Fn>
void parallel_blocks(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t lo = count * t / threads;
      const std::size_t hi = count * (t + 1) / threads;
      workers.emplace_back([&, t, lo, hi] {
        try {
          fn(lo, hi);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cyldom::detail
