#pragma once

#include <functional>

namespace torusgreen {

// Worker count for pixel sweeps: hardware concurrency, capped by the
// TORUSGREEN_THREADS environment variable when set.
int worker_count();

// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each, using
// worker_count() threads. fn must be safe to run concurrently on disjoint
// ranges.
void parallel_chunks(int n, const std::function<void(int, int)>& fn);

}  // namespace torusgreen
