#pragma once

#include <functional>

namespace approxlab {

// Number of worker threads: APPROXLAB_THREADS if set (>=1), else hardware concurrency.
int max_threads();

// Runs body(i) for i in [0, count). Work is split into contiguous index blocks;
// each index writes only its own output slot, so results are identical for any
// thread count. Reductions over the results must be done by the caller in index
// order.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace approxlab
