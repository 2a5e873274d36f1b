#pragma once

#include <cstddef>
#include <functional>

namespace dk {

/// Worker count: DEFORMKIT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = default).
/// Each index runs exactly once; callers write results by index so output
/// does not depend on scheduling. The exception of the lowest failing index
/// is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace dk
