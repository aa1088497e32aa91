#pragma once

#include <cstddef>
#include <functional>

namespace divnet {

// Runs fn(begin, end) over contiguous chunks of [0, count) on up to
// `threads` worker threads (0 = hardware concurrency). Chunks never
// overlap, so workers writing result slots by index need no locking.
// The first exception thrown by any worker is rethrown to the caller.
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t)>& fn);

// Per-index convenience wrapper.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace divnet
