#pragma once

#include <functional>

namespace mincut {

// Worker count for parallel loops: MINCUT_THREADS when set (clamped to
// hardware concurrency), otherwise 1.
int worker_count();

// Runs fn(i) for i in [0, count), chunked over worker_count() threads.
// Falls back to a plain loop when one worker suffices. fn must be safe to
// invoke concurrently for distinct i.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace mincut
