#pragma once

#include <cstddef>
#include <functional>

namespace depthcraft {

// Thread count from an explicit request, else DEPTHCRAFT_THREADS, else 1.
int resolve_threads(int requested = 0);

// Runs fn(i) for i in [0, n) on up to `threads` threads. Work is split into
// contiguous blocks, so results written by index are deterministic.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace depthcraft
