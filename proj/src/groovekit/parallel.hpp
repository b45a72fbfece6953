#pragma once

#include <functional>

namespace groovekit {

// Worker count for internal parallel loops: GROOVEKIT_THREADS when set (clamped
// to >= 1), otherwise the hardware concurrency.
int thread_budget();

// Runs fn(0..n-1) on up to thread_budget() workers. The first exception thrown
// by any index is rethrown (lowest index wins, matching a serial loop).
void parallel_for_index(int n, const std::function<void(int)>& fn);

} // namespace groovekit
