#pragma once

#include <cstddef>
#include <functional>

namespace gnorm {

/// 0 means std::thread::hardware_concurrency() (at least 1).
unsigned resolve_threads(unsigned requested) noexcept;

/// Runs body(i) for i in [0, count) on up to `threads` workers pulling indices
/// from a shared counter. The first exception thrown by any body is rethrown
/// after all workers stop.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace gnorm
