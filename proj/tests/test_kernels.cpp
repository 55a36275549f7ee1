#include <doctest.h>

#include "stumpbounds/kernels.hpp"
#include "oracles.hpp"

using namespace stumpbounds;

// The OpenMP kernels must reproduce the serial reference bit for bit: work
// is partitioned by index and reduced in a fixed order.

TEST_CASE("stump scan: parallel == serial, bitwise") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Rng r = rng.child("t", trial);
        Rng gen_rng = r.child("gen");
        const LabeledDataset ds = gen_twonorm(400, 8, gen_rng);
        std::vector<double> w(ds.size());
        double total = 0.0;
        for (auto& v : w) total += (v = r.uniform01() + 0.01);
        for (auto& v : w) v /= total;
        double resum = 0.0;
        for (double v : w) resum += v;
        w[0] += 1.0 - resum;

        const auto order = kernels::FeatureOrder::build(ds);
        const TrainedStump a = kernels::best_stump_serial(ds, w, order);
        const TrainedStump b = kernels::best_stump_parallel(ds, w, order);
        CHECK(a.stump.feature == b.stump.feature);
        CHECK(a.stump.threshold == b.stump.threshold);
        CHECK(a.stump.orient == b.stump.orient);
        CHECK(a.weighted_error == b.weighted_error);
    }
}

TEST_CASE("margins: parallel == serial, bitwise") {
    Rng rng(32);
    Rng gen_rng = rng.child("gen");
    const LabeledDataset ds = gen_twonorm(777, 5, gen_rng);
    std::vector<Stump> stumps;
    std::vector<double> w;
    for (int k = 0; k < 64; ++k) {
        stumps.push_back({static_cast<int>(rng.uniform_index(5)),
                          rng.uniform(-2.0, 2.0),
                          rng.rademacher() > 0 ? Orientation::LE : Orientation::GE});
        w.push_back(1.0 / 64.0);
    }
    std::vector<double> ma(ds.size()), mb(ds.size());
    kernels::margins_serial(ds, stumps, w, ma);
    kernels::margins_parallel(ds, stumps, w, mb);
    CHECK(ma == mb);
}

TEST_CASE("rademacher draws: parallel == serial, bitwise") {
    Rng rng(33);
    Rng gen_rng = rng.child("gen");
    const LabeledDataset ds = gen_twonorm(300, 3, gen_rng);
    const auto order = kernels::FeatureOrder::build(ds);
    std::vector<double> sa(48), sb(48);
    kernels::rademacher_sups_serial(ds, order, 48, rng, sa);
    kernels::rademacher_sups_parallel(ds, order, 48, rng, sb);
    CHECK(sa == sb);
}
