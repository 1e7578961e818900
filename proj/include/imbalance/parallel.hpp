#pragma once

#include <cstddef>
#include <functional>

namespace imbalance {

/// Worker count: IMBALANCE_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (0 or unset means auto).
unsigned worker_count();

/// Runs body(i) for i in [begin, end). Work is split into contiguous chunks;
/// callers write to disjoint slots so the result does not depend on the
/// schedule. The first exception thrown by any chunk is rethrown.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body);

}  // namespace imbalance
