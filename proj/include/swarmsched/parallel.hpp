#ifndef SWARMSCHED_PARALLEL_HPP
#define SWARMSCHED_PARALLEL_HPP

#include <cstddef>
#include <thread>

namespace swarmsched {

/// Resolves a requested worker count: 0 means "use all hardware threads",
/// anything else is clamped to at least 1.
inline int resolve_parallelism(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs body(i) for every i in [0, count). threads == 1 takes the plain
/// serial loop, which doubles as the reference path the tests compare the
/// OpenMP path against. Bodies must not throw and must write only to their
/// own slot.
template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
#ifdef _OPENMP
    #pragma omp parallel for num_threads(threads) schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
        body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < count; ++i) body(i);
#endif
}

} // namespace swarmsched

#endif // SWARMSCHED_PARALLEL_HPP
