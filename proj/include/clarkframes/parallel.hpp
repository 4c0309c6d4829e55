#pragma once

#include <cstddef>
#include <functional>

namespace clarkframes {

// Worker count: min(hardware_concurrency, CLARKFRAMES_THREADS if set).
// Values < 1 in the variable mean 1.
int thread_budget();

// Runs fn(i) for i in [0, count) on up to thread_budget() threads.  The
// caller guarantees the iterations are independent.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace clarkframes
