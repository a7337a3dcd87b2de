#pragma once

#include <functional>

namespace fpl {

// requested > 0 wins, then the FPL_THREADS environment variable, then
// hardware concurrency. Always at least 1.
int resolve_threads(int requested);

// Static block partition of [0, n) over `threads` workers. Results must be
// written to per-index slots; merge order is then independent of scheduling,
// which is what keeps every output byte-identical across thread counts.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace fpl
