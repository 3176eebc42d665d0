#pragma once

#include <cstddef>
#include <functional>

namespace fracgreen {

// Worker count from FRACGREEN_THREADS (0 or unset = hardware concurrency).
unsigned thread_budget();

// Runs body(i) for i in [0, n). Each index is handled by exactly one worker,
// so results written to disjoint slots are schedule independent. The first
// exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fracgreen
