#pragma once

#include <cstddef>
#include <functional>

namespace arr4 {

/// Worker count from ARR4_THREADS (positive integer), else the hardware
/// concurrency, at least 1.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace arr4
