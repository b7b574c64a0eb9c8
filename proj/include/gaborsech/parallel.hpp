#pragma once

#include <cstddef>
#include <functional>

namespace gaborsech {

/// Number of worker threads used by the grid evaluators. Read from the
/// GSL_THREADS environment variable when set to a positive integer,
/// otherwise the hardware concurrency.
int compute_threads();

/// Calls body(i) for i in [0, n). Indices are split into contiguous
/// chunks across compute_threads() workers. Callers write results into
/// per-index slots, so output never depends on the schedule. If any call
/// throws, the exception from the lowest failing chunk is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gaborsech
