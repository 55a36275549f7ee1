#include <doctest.h>

#include <cmath>

#include "stumpbounds/errors.hpp"
#include "stumpbounds/kernels.hpp"
#include "stumpbounds/stump.hpp"
#include "oracles.hpp"

using namespace stumpbounds;

TEST_CASE("eval: orientations and closed boundaries") {
    const double x[] = {0.3};
    CHECK(Stump{0, 0.5, Orientation::LE}.predict(x) == 1);
    CHECK(Stump{0, 0.5, Orientation::GE}.predict(x) == -1);
    const double at_thr[] = {0.5};
    CHECK(Stump{0, 0.5, Orientation::LE}.predict(at_thr) == 1);
    CHECK(Stump{0, 0.5, Orientation::GE}.predict(at_thr) == 1);
}

TEST_CASE("train: perfectly separable 1-D data") {
    const LabeledDataset ds({0.1, 0.4, 0.6, 0.9}, {1, 1, -1, -1}, 1);
    const std::vector<double> w(4, 0.25);
    const TrainedStump t = train_stump(ds, w);
    CHECK(t.weighted_error == 0.0);
    CHECK(t.stump.feature == 0);
    CHECK(t.stump.threshold == doctest::Approx(0.5));
    CHECK(t.stump.orient == Orientation::LE);
}

TEST_CASE("train: all labels +1 solved by a sentinel stump") {
    const LabeledDataset ds({0.2, 0.5, 0.8}, {1, 1, 1}, 1);
    const std::vector<double> w = {0.2, 0.5, 0.3};
    const TrainedStump t = train_stump(ds, w);
    CHECK(t.weighted_error == 0.0);
    const double probe[] = {0.5};
    CHECK(t.stump.predict(probe) == 1);
}

TEST_CASE("train matches exhaustive enumeration on random data") {
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        Rng r = rng.child("trial", trial);
        const std::size_t n = 2 + r.uniform_index(29);
        const std::size_t d = 1 + r.uniform_index(3);
        std::vector<double> xs(n * d);
        std::vector<int> ys(n);
        for (auto& v : xs) v = r.uniform(-1.0, 1.0);
        for (auto& y : ys) y = r.rademacher();
        const LabeledDataset ds(std::move(xs), std::move(ys), d);
        std::vector<double> w(n);
        double total = 0.0;
        for (auto& v : w) total += (v = r.uniform01() + 1e-3);
        for (auto& v : w) v /= total;
        // keep the sum at 1 to machine precision
        double resum = 0.0;
        for (double v : w) resum += v;
        w[0] += 1.0 - resum;

        const TrainedStump fast = train_stump(ds, w);
        const TrainedStump slow = oracles::exhaustive_best_stump(ds, w);
        CHECK(fast.weighted_error == doctest::Approx(slow.weighted_error).epsilon(1e-12));
        // the returned stump really achieves the minimum
        CHECK(oracles::stump_error(ds, w, fast.stump) ==
              doctest::Approx(slow.weighted_error).epsilon(1e-12));
    }
}

TEST_CASE("train is invariant to permuting the example order") {
    Rng rng(22);
    const std::size_t n = 25;
    std::vector<double> xs(n * 2);
    std::vector<int> ys(n);
    for (auto& v : xs) v = rng.uniform(-1.0, 1.0);
    for (auto& y : ys) y = rng.rademacher();
    std::vector<double> w(n, 1.0 / n);
    const LabeledDataset ds(xs, ys, 2);
    const TrainedStump a = train_stump(ds, w);

    // reverse the order
    std::vector<double> xs_r(n * 2);
    std::vector<int> ys_r(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs_r[i * 2] = xs[(n - 1 - i) * 2];
        xs_r[i * 2 + 1] = xs[(n - 1 - i) * 2 + 1];
        ys_r[i] = ys[n - 1 - i];
    }
    const TrainedStump b = train_stump(LabeledDataset(xs_r, ys_r, 2), w);
    CHECK(a.stump.feature == b.stump.feature);
    CHECK(a.stump.threshold == b.stump.threshold);
    CHECK(a.stump.orient == b.stump.orient);
}

TEST_CASE("train validates its weight precondition") {
    const LabeledDataset ds({0.1, 0.9}, {1, -1}, 1);
    CHECK_THROWS_AS(train_stump(ds, std::vector<double>{0.6, 0.6}), NumericError);
    CHECK_THROWS_AS(train_stump(ds, std::vector<double>{1.5, -0.5}), NumericError);
}

TEST_CASE("rademacher: n=1 sup is always 1") {
    const LabeledDataset ds({0.4}, {1}, 1);
    const RademacherEstimate est = rademacher_complexity(ds, 50, Rng(3));
    CHECK(est.estimate == 1.0);
    CHECK(est.std_error == 0.0);
}

TEST_CASE("rademacher per-draw sup matches brute force on small data") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Rng r = rng.child("t", trial);
        const std::size_t n = 10, d = 2;
        std::vector<double> xs(n * d);
        std::vector<int> ys(n, 1);
        for (auto& v : xs) v = r.uniform(-1.0, 1.0);
        const LabeledDataset ds(std::move(xs), std::move(ys), d);
        const auto order = kernels::FeatureOrder::build(ds);
        std::vector<int> eps(n);
        for (auto& e : eps) e = r.rademacher();
        CHECK(kernels::stump_sign_sup(ds, order, eps) ==
              doctest::Approx(oracles::exhaustive_sign_sup(ds, eps)).epsilon(1e-15));
    }
}

TEST_CASE("rademacher estimate stays in [0,1]") {
    Rng rng(24);
    Rng gen_rng = rng.child("gen");
    const LabeledDataset ds = gen_twonorm(60, 4, gen_rng);
    const RademacherEstimate est = rademacher_complexity(ds, 80, rng.child("mc"));
    CHECK(est.estimate >= 0.0);
    CHECK(est.estimate <= 1.0);
}

TEST_CASE("vc dimension of stumps") {
    CHECK(stump_vc_dim(1) == 2);
    CHECK(stump_vc_dim(20) == 9);
    CHECK(stump_vc_dim(36) == 10);

    // defining inequality holds at the result and fails just below it
    for (int d = 2; d <= 60; ++d) {
        const int v = stump_vc_dim(d);
        REQUIRE(v >= 2);
        CHECK(std::pow(2.0, v - 1) >= (v - 1) * static_cast<double>(d) + 1.0);
        if (v > 2)
            CHECK(std::pow(2.0, v - 2) < (v - 2) * static_cast<double>(d) + 1.0);
    }
    // monotone nondecreasing in d
    for (int d = 1; d < 60; ++d) CHECK(stump_vc_dim(d) <= stump_vc_dim(d + 1));
}

TEST_CASE("class meta: alpha and gamma_min for the 1-D class") {
    const StumpClassMeta m = StumpClassMeta::for_dim(1);
    CHECK(m.vc_dim == 2);
    CHECK(m.cover_exponent == doctest::Approx(2.0));
    CHECK(m.alpha == doctest::Approx(1.0));
    CHECK(m.gamma_min() == doctest::Approx(2.0 / 3.0));

    const StumpClassMeta m36 = StumpClassMeta::for_dim(36);
    CHECK(m36.gamma_min() == doctest::Approx(18.0 / 19.0));
}
