#pragma once

#include <cstddef>
#include <functional>

namespace extsq {

/// 0 means "use hardware concurrency".
unsigned resolve_jobs(unsigned requested);

/// Runs body(i) for i in [0, count) on up to `jobs` worker threads.
/// Work items must be independent; the first exception thrown by any
/// worker is rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace extsq
