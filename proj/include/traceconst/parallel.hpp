#pragma once

#include <cstddef>
#include <functional>

namespace traceconst {

/// Worker threads used by grid scans: hardware concurrency, capped by the
/// TRACECONST_THREADS environment variable when set. Always >= 1.
int worker_thread_count();

/// Runs fn(i) for i in [0, n) on worker threads with a static block
/// partition. Work assignment depends only on n and the thread count, and
/// callers write results by index, so reductions stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace traceconst
