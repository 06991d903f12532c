#pragma once

#include <cstddef>
#include <functional>

namespace fiatkit {

/// Worker count: FIATKIT_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Results must be written to per-index slots;
/// the first exception thrown (lowest index) is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fiatkit
