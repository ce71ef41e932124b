#pragma once

#include <functional>

namespace rotalg {

// Worker cap: ROTALG_THREADS when set, hardware concurrency otherwise.
int worker_count();

// Runs fn(i) for i in [0, count) on up to worker_count() threads with a
// static stride partition.  Each index must write only to its own slot, so
// results are bit-identical for any worker count.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace rotalg
