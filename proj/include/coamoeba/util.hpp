#pragma once

#include <cstddef>
#include <functional>

namespace coamoeba {

// Number of worker threads: COAMOEBA_THREADS if set, else hardware
// concurrency, at least 1.
int worker_threads();

// Runs body(chunk_index) for chunk_index in [0, chunks) across the worker
// pool.  Each chunk must be an independent pure computation; callers
// concatenate per-chunk results in index order to stay deterministic.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body);

}  // namespace coamoeba
