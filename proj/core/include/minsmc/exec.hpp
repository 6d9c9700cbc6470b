#ifndef MINSMC_EXEC_HPP_
#define MINSMC_EXEC_HPP_

#include <cstddef>
#include <functional>

namespace minsmc {

// Worker count for intra-round parallelism. Affects speed only, never
// results. Initialized from the MINSMC_WORKERS environment variable
// (default 1).
int worker_count();
void set_worker_count(int n);

// Runs fn(begin, end) over a partition of [0, n) into contiguous chunks,
// one per worker. Serial when worker_count() == 1 or n is small. Chunking
// is deterministic; fn must write only to disjoint output slots.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace minsmc

#endif  // MINSMC_EXEC_HPP_
