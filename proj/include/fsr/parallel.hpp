// Thread control and deterministic parallel loops.
//
// Every kernel in this library is written as a plain indexed loop over
// disjoint output slots, so the OpenMP and serial paths produce
// bit-identical results: no shared accumulators, no reductions whose
// association depends on the thread count.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsr::par {

/// Upper bound on worker threads: hardware count capped by FSR_THREADS.
inline int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("FSR_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min<long>(n, cap);
    }
    return std::max(1, n);
}

/// Execution policy for kernels. threads == 1 selects the serial
/// reference path (no OpenMP runtime involvement at all).
struct Exec {
    int threads = 1;
    static Exec serial() { return {1}; }
    static Exec parallel() { return {max_threads()}; }
};

/// Run f(i) for i in [0, n). Static schedule; each index is written by
/// exactly one thread, so results do not depend on the thread count.
template <class F>
inline void for_each(std::int64_t n, const Exec& ex, F&& f) {
    if (ex.threads <= 1) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(ex.threads)
    for (std::int64_t i = 0; i < n; ++i) f(i);
#else
    for (std::int64_t i = 0; i < n; ++i) f(i);
#endif
}

} // namespace fsr::par
