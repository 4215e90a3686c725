#pragma once

#include <cstddef>
#include <functional>

namespace sobolev {

/// Number of worker threads used by parallel_for (default 1).
int worker_threads();
void set_worker_threads(int n);

/// Runs body(i) for i in [0, n). Iterations are split into contiguous blocks
/// per worker; every iteration must write only to its own outputs, so the
/// result does not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sobolev
