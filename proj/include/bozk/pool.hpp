#pragma once

#include <cstddef>
#include <functional>

namespace bozk {

// BOZK_THREADS if set and positive, else hardware concurrency (at least 1)
unsigned worker_count();

// Runs job(0..n-1) on up to worker_count() threads.  Jobs must write only
// to their own slot; the first exception thrown is rethrown after joining.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job);

}  // namespace bozk
