#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace trilie {

/// Worker count from TRILIE_THREADS (default: hardware concurrency, at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
/// Bodies must not share mutable state; each writes its own result slot.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace trilie
