#pragma once

#include <cstddef>
#include <functional>

namespace fmmc {

// Worker count: hardware concurrency, capped by FMMC_LAB_THREADS when set.
int worker_count();

// Calls body(i) for i in [0, count). Each index is handled exactly once;
// callers write results into slot i so the output is independent of the
// thread schedule. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace fmmc
