#pragma once
#include <exception>
#include <functional>

namespace specfac {

// Runs fn(i) for i in [0, count) across `jobs` threads in contiguous chunks.
// jobs <= 1 runs inline.  The first exception thrown by any chunk is
// rethrown on the calling thread after all threads join.
void parallel_for(long count, int jobs, const std::function<void(long)>& fn);

// Default worker count: SPECFAC_JOBS env var if set, else hardware
// concurrency, else 1.
int default_jobs();

}  // namespace specfac
