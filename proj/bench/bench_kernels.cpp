// Timing comparison of the serial reference kernels against their OpenMP
// variants: stump scan, margin evaluation, Rademacher draws.
//
//   ./bench_kernels [n] [d] [rounds]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stumpbounds/dataset.hpp"
#include "stumpbounds/kernels.hpp"
#include "stumpbounds/rng.hpp"

using namespace stumpbounds;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
                name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
    const std::size_t d = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 36;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 3;

#ifdef _OPENMP
    std::printf("n=%zu d=%zu threads=%d\n", n, d, omp_get_max_threads());
#else
    std::printf("n=%zu d=%zu (OpenMP disabled)\n", n, d);
#endif

    Rng rng(42);
    Rng gen_rng = rng.child("bench-data");
    const LabeledDataset ds = gen_twonorm(n, d, gen_rng);
    const auto order = kernels::FeatureOrder::build(ds);
    const std::vector<double> weights(n, 1.0 / static_cast<double>(n));

    {
        TrainedStump a, b;
        const double ts = time_best_of(reps, [&] { a = kernels::best_stump_serial(ds, weights, order); });
        const double tp = time_best_of(reps, [&] { b = kernels::best_stump_parallel(ds, weights, order); });
        if (a.stump.feature != b.stump.feature || a.weighted_error != b.weighted_error) {
            std::fprintf(stderr, "stump kernels disagree\n");
            return 1;
        }
        report("stump scan", ts, tp);
    }

    {
        // A 256-stump vote evaluated over the whole sample.
        std::vector<Stump> stumps;
        std::vector<double> w;
        Rng stump_rng = rng.child("bench-stumps");
        for (int k = 0; k < 256; ++k) {
            stumps.push_back({static_cast<int>(stump_rng.uniform_index(d)),
                              stump_rng.uniform(-2.0, 2.0),
                              stump_rng.rademacher() > 0 ? Orientation::LE
                                                         : Orientation::GE});
            w.push_back(1.0 / 256.0);
        }
        std::vector<double> ma(n), mb(n);
        const double ts = time_best_of(reps, [&] { kernels::margins_serial(ds, stumps, w, ma); });
        const double tp = time_best_of(reps, [&] { kernels::margins_parallel(ds, stumps, w, mb); });
        if (ma != mb) {
            std::fprintf(stderr, "margin kernels disagree\n");
            return 1;
        }
        report("margins (256 stumps)", ts, tp);
    }

    {
        const int draws = 64;
        std::vector<double> sa(draws), sb(draws);
        const double ts = time_best_of(
            reps, [&] { kernels::rademacher_sups_serial(ds, order, draws, rng, sa); });
        const double tp = time_best_of(
            reps, [&] { kernels::rademacher_sups_parallel(ds, order, draws, rng, sb); });
        if (sa != sb) {
            std::fprintf(stderr, "rademacher kernels disagree\n");
            return 1;
        }
        report("rademacher (64 draws)", ts, tp);
    }
    return 0;
}
