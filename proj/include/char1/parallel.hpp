#pragma once

#include <cstddef>
#include <functional>

namespace char1 {

/// Worker count: hardware concurrency, capped by the CHAR1_THREADS environment variable.
std::size_t worker_threads();

/// Runs body(i) for i in [0, count) across worker_threads() threads.
/// The first exception thrown by any task is rethrown after all workers have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace char1
