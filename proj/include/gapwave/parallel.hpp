#pragma once

#include <cstddef>
#include <functional>

namespace gapwave {

/// Worker count: GAPWAVE_THREADS if set and positive, otherwise the hardware
/// concurrency (GAPWAVE_THREADS=0 also means auto).
std::size_t thread_count() noexcept;

/// Runs body(i) for i in [0, n) across up to thread_count() threads. Each
/// index is independent, so results written per index are identical to a
/// sequential run. If any call throws, the exception from the lowest failing
/// index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gapwave
