// Execution policy for the data-parallel kernels (series summation, zero
// scanning, per-zero refinement, per-y evaluation).
//
// Every kernel maps independent indices to preallocated slots; reductions
// afterwards run serially in index order.  Slot-indexed writes make the
// OpenMP path bit-identical to the serial reference, which the test suite
// asserts and tools/bench_kernels times.

#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lambertz {

enum class ExecPolicy { serial, openmp };

template <class F>
void parallel_for(std::size_t n, ExecPolicy policy, F&& f) {
#ifdef _OPENMP
    if (policy == ExecPolicy::openmp) {
        std::exception_ptr first_error;
        std::mutex err_mtx;
        #pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard lk(err_mtx);
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#else
    (void)policy;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace lambertz
