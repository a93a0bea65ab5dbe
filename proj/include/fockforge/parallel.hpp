#pragma once

#include <cstddef>
#include <functional>

namespace fockforge {

// Worker count: FOCKFORGE_THREADS when set to a positive integer, else the
// hardware concurrency (at least 1).
int thread_count();

// Runs body(k) for k in [0, count) on up to thread_count() threads. The first
// exception thrown by any task is rethrown after all workers have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace fockforge
