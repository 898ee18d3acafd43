#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace planpref::parallel {

// Runtime switch between the serial reference path and the OpenMP path.
// Both paths produce bit-identical results: every output element is
// accumulated in a fixed serial order inside a single thread, so the choice
// (and the thread count) never changes the arithmetic.
enum class Exec { Serial, Parallel };

// Process-wide default used by kernels when no explicit policy is given.
Exec default_exec();
void set_default_exec(Exec e);

// Caps the OpenMP thread count (0 keeps the runtime default).
void set_threads(int n);
int thread_count();

inline bool openmp_built() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

template <typename Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace planpref::parallel
