#pragma once

#include <cstddef>
#include <functional>

namespace pairclust {

/// Worker count: hardware concurrency, capped by the PAIRCLUST_THREADS
/// environment variable when it is set to a positive integer.
std::size_t thread_count();

/// Calls `body(i)` for every i in [0, count), spread over `threads` workers
/// (0 means `thread_count()`). Indices are handed out dynamically, so `body`
/// must only write to per-index state. The first exception thrown by any
/// call is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

}  // namespace pairclust
