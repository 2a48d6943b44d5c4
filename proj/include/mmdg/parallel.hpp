#pragma once

#include <cstddef>

#if defined(MMDG_HAVE_OPENMP)
#include <omp.h>
#endif

namespace mmdg {

/// Execution policy for the element-/node-parallel kernels. The serial path
/// is the reference the parallel path is tested against; every kernel writes
/// disjoint output blocks, so both produce bitwise identical results.
enum class Exec { serial, parallel };

inline int max_threads() {
#if defined(MMDG_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs fn(k) for k in [0, n).
template <class Fn>
void parallel_for(Exec exec, std::ptrdiff_t n, Fn&& fn) {
#if defined(MMDG_HAVE_OPENMP)
  if (exec == Exec::parallel && n > 1) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) fn(k);
    return;
  }
#endif
  for (std::ptrdiff_t k = 0; k < n; ++k) fn(k);
}

}  // namespace mmdg
