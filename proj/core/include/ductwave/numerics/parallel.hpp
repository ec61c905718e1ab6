#pragma once

#include <cstddef>
#include <functional>

namespace ductwave {

/// Number of worker threads used by parallelFor (DUCTWAVE_THREADS overrides;
/// defaults to the hardware concurrency).
int workerThreads();

/// Runs fn(i) for i in [0, n). Work is split into static contiguous chunks,
/// so any reduction done into per-index slots is deterministic regardless of
/// the thread count.
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ductwave
