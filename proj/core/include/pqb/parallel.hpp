#pragma once

#include <cstddef>
#include <functional>

namespace pqb {

/// Worker count: PQB_THREADS when set (0 = hardware concurrency), else
/// hardware concurrency. Always at least 1.
unsigned thread_count();

/// Runs body(i) for i in [0, count). Each index is handled exactly once and
/// callers write results to per-index slots, so output never depends on the
/// schedule. Exceptions from workers are rethrown on the calling thread
/// (the lowest failing index wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pqb
