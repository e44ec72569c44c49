// Kernel timing: OpenMP-parallel implementations against their serial
// references on a mid-size planted instance.
//
//   ./bench_kernels [n] [d1] [d2] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rsbm/graphgen.hpp"
#include "rsbm/recovery.hpp"
#include "rsbm/rigidity.hpp"
#include "rsbm/saw.hpp"
#include "rsbm/spectral.hpp"

using namespace rsbm;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_best(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock_type::now();
        f();
        const double s = std::chrono::duration<double>(clock_type::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-22s serial %9.4fs   parallel %9.4fs   speedup %5.2fx\n", name, serial, parallel,
                serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 1000;
    const int d1 = argc > 2 ? std::atoi(argv[2]) : 10;
    const int d2 = argc > 3 ? std::atoi(argv[3]) : 2;
    const int repeats = argc > 4 ? std::atoi(argv[4]) : 3;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    PlantedInstance inst = sample_rsbm(RsbmParams{n, d1, d2}, 1);
    const Graph& g = inst.graph;
    std::printf("instance: 2n=%d, degree %d\n", g.num_vertices(), d1 + d2);

    {
        std::vector<double> x(static_cast<std::size_t>(g.num_vertices()), 1.0);
        double serial = time_best(repeats, [&] {
            for (int i = 0; i < 200; ++i) x = matvec_serial(g, x);
        });
        double parallel = time_best(repeats, [&] {
            for (int i = 0; i < 200; ++i) x = matvec(g, x);
        });
        row("matvec x200", serial, parallel);
    }

    {
        const int l = 4;
        double serial = time_best(repeats, [&] { build_saw_serial(g, l, 1e12); });
        double parallel = time_best(repeats, [&] { build_saw(g, l, 1e12); });
        row("build_saw l=4", serial, parallel);
    }

    {
        double serial = time_best(repeats, [&] { tangle_audit_serial(g, 2); });
        double parallel = time_best(repeats, [&] { tangle_audit(g, 2); });
        row("tangle_audit l=2", serial, parallel);
    }

    {
        Labeling labels = inst.labels;
        double serial = time_best(repeats, [&] {
            Labeling l2 = labels;
            for (int i = 0; i < 200; ++i) l2 = majority_step_serial(g, l2);
        });
        double parallel = time_best(repeats, [&] {
            Labeling l2 = labels;
            for (int i = 0; i < 200; ++i) l2 = majority_step(g, l2);
        });
        row("majority x200", serial, parallel);
    }

    {
        PlantedInstance small = sample_rsbm(RsbmParams{12, 5, 3}, 2);
        double serial = time_best(repeats, [&] { min_bisection_bruteforce_serial(small.graph); });
        double parallel = time_best(repeats, [&] { min_bisection_bruteforce(small.graph); });
        row("min_bisection 2n=24", serial, parallel);
    }

    {
        PlantedInstance small = sample_rsbm(RsbmParams{11, 4, 3}, 3);
        double serial = time_best(repeats, [&] { edge_expansion_check_serial(small.graph, 0.5); });
        double parallel = time_best(repeats, [&] { edge_expansion_check(small.graph, 0.5); });
        row("expansion 2n=22", serial, parallel);
    }

    return 0;
}
