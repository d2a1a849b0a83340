#pragma once

#include <functional>

namespace tsnet {

// Runs fn(0..count-1) over up to `threads` workers (0 -> hardware
// concurrency). Results must be written to per-index slots; fn must not
// throw. Index coverage is exact and independent of the worker count.
void parallel_for_index(int count, int threads,
                        const std::function<void(int)>& fn);

}  // namespace tsnet
