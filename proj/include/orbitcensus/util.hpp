#pragma once

#include <cstddef>
#include <functional>

namespace orbitcensus {

/// Worker count for parallel scans: hardware concurrency, capped by the
/// ORBITCENSUS_THREADS environment variable when set.
unsigned worker_count();

/// Runs fn(begin, end) over a partition of [0, n) on worker threads and
/// joins. fn must not touch shared mutable state.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t,
                                              unsigned)>& fn);

}  // namespace orbitcensus
