#pragma once

#include <cstdint>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qnk {

/// Runs fn(i) for i in [0, count).  Every index writes only its own outputs,
/// so the parallel result is identical to the serial loop regardless of the
/// thread count.
template <typename F>
void parallel_for(std::int64_t count, F&& fn, bool parallel = true) {
#ifdef _OPENMP
    if (parallel && count > 1) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
#else
    (void)parallel;
#endif
    for (std::int64_t i = 0; i < count; ++i) fn(i);
}

inline bool parallel_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace qnk
