#ifndef MISANNEAL_PARALLEL_HPP
#define MISANNEAL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace misanneal {

// Runs fn(i) once for every i in [0, count) on up to `parallelism` workers.
// Callers store results by index, so the outcome is identical for any
// parallelism degree.  If several calls throw, the exception from the lowest
// index is rethrown after all workers drain.
void parallel_for_index(std::size_t count, int parallelism,
                        const std::function<void(std::size_t)>& fn);

}  // namespace misanneal

#endif
