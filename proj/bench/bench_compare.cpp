// Benchmark: parallel kernels against their single-threaded references.
// Each section checks that both routes produce identical results before
// reporting timings.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "pgspectra/charpoly.hpp"
#include "pgspectra/powergraph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pgspectra;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
double time_call(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
}

int threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void report(const std::string& name, double serial, double parallel, bool same) {
    std::printf("%-34s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name.c_str(),
                serial, parallel, parallel > 0 ? serial / parallel : 0.0,
                same ? "results identical" : "RESULT MISMATCH");
}

IMat random_matrix(std::size_t n, long lo, long hi, std::uint64_t seed) {
    IMat m = IMat::zero(n);
    std::uint64_t s = seed;
    for (auto& v : m.a) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        v = lo + long((s >> 33) % std::uint64_t(hi - lo + 1));
    }
    return m;
}

} // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    std::printf("worker threads: %d\n\n", threads());
    bool all_same = true;

    {
        const GroupSpec spec{quick ? 24u : 60u, quick ? 32u : 84u};
        AdjacencyMatrix a, b;
        const double ts = time_call([&] { a = build_adjacency_serial(spec); });
        const double tp = time_call([&] { b = build_adjacency(spec); });
        const bool same = a == b;
        all_same = all_same && same;
        std::printf("power graph on %zu vertices\n", a.size());
        report("  adjacency fill", ts, tp, same);
    }

    {
        const std::size_t n = quick ? 64 : 140;
        const IMat m = random_matrix(n, -9, 9, 42);
        IntPoly a, b;
        const double ts = time_call([&] { a = charpoly_modular_serial(m); });
        const double tp = time_call([&] { b = charpoly_modular(m); });
        const bool same = a == b;
        all_same = all_same && same;
        std::printf("charpoly, %zux%zu integer matrix\n", n, n);
        report("  modular route (prime loop)", ts, tp, same);
    }

    {
        const std::size_t n = quick ? 40 : 90;
        const IMat m = random_matrix(n, -5, 5, 7);
        IntPoly a, b;
        const double ts = time_call([&] { a = charpoly_interpolation_serial(m); });
        const double tp = time_call([&] { b = charpoly_interpolation(m); });
        const bool same = a == b;
        all_same = all_same && same;
        std::printf("charpoly, %zux%zu integer matrix\n", n, n);
        report("  interpolation route (point loop)", ts, tp, same);
    }

    if (!all_same) {
        std::printf("\nbenchmark failed: a parallel kernel disagreed with its reference\n");
        return 1;
    }
    return 0;
}
