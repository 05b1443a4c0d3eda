#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cliffsym {

/* All batch verifiers run their task lists either through the serial
 * reference loop or through the OpenMP kernel. Tasks write to disjoint,
 * preallocated slots, so both paths yield identical reports. */
enum class ExecMode { serial, parallel };

template <class F>
void parallel_for(ExecMode mode, std::ptrdiff_t n, F&& body)
{
#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)mode;
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

}  // namespace cliffsym
