// Batch-level parallel helper. Results are written to per-index slots, so any
// reduction the caller performs afterwards runs in a fixed order regardless of
// thread scheduling.
#pragma once

#include <cstddef>
#include <functional>

namespace startdet {

// Number of worker threads to use: min(STARTDET_THREADS, hardware), >= 1.
int thread_budget();

// Runs fn(i) for i in [0, n) across at most thread_budget() threads.
// fn must only touch state owned by index i. Exceptions propagate.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace startdet
