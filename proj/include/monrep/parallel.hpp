#pragma once

#include <cstdint>

#if defined(MONREP_HAVE_OPENMP)
#include <omp.h>
#endif

namespace monrep {

/// Stateless per-index seed derivation (splitmix64 finalizer), so that the
/// i-th sample of a run is identical no matter how indices are scheduled
/// across threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Serial reference runner: the semantics every parallel run must reproduce.
template <typename Fn>
void run_indexed_serial(int n, Fn&& fn) {
    for (int i = 0; i < n; ++i) fn(i);
}

/// Calls fn(i) for i in [0, n).  jobs == 1 runs the serial reference; other
/// values fan out across OpenMP threads (jobs <= 0 meaning "all available").
/// fn must write its result into per-index storage and must not throw.
template <typename Fn>
void run_indexed(int n, int jobs, Fn&& fn) {
#if defined(MONREP_HAVE_OPENMP)
    if (jobs != 1) {
        const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#endif
    run_indexed_serial(n, static_cast<Fn&&>(fn));
}

} // namespace monrep
