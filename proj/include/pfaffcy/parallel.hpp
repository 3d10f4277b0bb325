#pragma once

#include <cstddef>
#include <functional>

namespace pfaffcy {

/// Worker count used by the parallel kernels (defaults to PFAFFCY_THREADS or 1).
int thread_count();
void set_thread_count(int n);

/// Runs body(i) for i in [0, n) across the worker pool. Every index is
/// processed exactly once, so results written to per-index slots are
/// identical to the sequential run.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pfaffcy
