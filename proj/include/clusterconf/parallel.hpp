#pragma once

#include <cstddef>
#include <functional>

namespace clusterconf {

// Number of worker threads: explicit argument wins, else the
// CLUSTERCONF_THREADS environment variable, else 1.
int default_thread_count();

// Run fn(0..njobs-1) on up to `threads` workers. Jobs are claimed from a
// shared counter, so the schedule varies, but callers store results by index
// and fold them in index order; every emitted byte is therefore independent
// of the thread count.
void parallel_for(std::size_t njobs, int threads,
                  const std::function<void(std::size_t)>& fn);

} // namespace clusterconf
