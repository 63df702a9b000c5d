// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

namespace oia {

// Runs fn(i) once for every i in [0, n) across `threads` workers. Callers
// keep determinism by writing into per-index output slots; any exception
// from a worker is rethrown on the calling thread. threads <= 1 runs inline;
// threads == 0 uses the hardware concurrency.
void parallel_for_index(std::int64_t n, int threads,
                        const std::function<void(std::int64_t)>& fn);

// Resolved worker count for a requested value (0 -> hardware concurrency).
int resolve_threads(int threads);

}  // namespace oia
