#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "stumpbounds/ensemble.hpp"
#include "stumpbounds/errors.hpp"
#include "oracles.hpp"

using namespace stumpbounds;

TEST_CASE("adaboost reweighting at eps = 1/4") {
    // No stump is consistent with (+,+,-,+), so round 1 has eps = 1/4.
    const LabeledDataset ds({0.1, 0.4, 0.6, 0.9}, {1, 1, -1, 1}, 1);
    const TrainingTrace trace = adaboost(ds, 1);
    const TraceRound& r = trace.rounds().front();
    CHECK(r.eps == doctest::Approx(0.25));
    CHECK(r.beta == doctest::Approx(1.0 / 3.0));
    CHECK(r.dist_sum == doctest::Approx(1.0).epsilon(1e-12));
    // the mistake keeps weight 1/4 while correct examples shrink to 1/12:
    // normalized, the misclassified example carries exactly half the mass
    CHECK(r.miscl_mass_after == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("adaboost on separable data clamps eps and drives error to 0") {
    const LabeledDataset ds({0.1, 0.4, 0.6, 0.9}, {1, 1, -1, -1}, 1);
    const TrainingTrace trace = adaboost(ds, 3);
    REQUIRE(trace.num_rounds() == 3);
    CHECK(trace.rounds()[0].eps == doctest::Approx(1e-10));
    CHECK(trace.rounds()[0].eps_clamped);
    const Evaluation ev = evaluate(trace.combination_at(1), ds);
    CHECK(ev.zero_one_error == 0.0);
}

TEST_CASE("adaboost stops when no weak learner exists") {
    // 2-D XOR: every stump has weighted error exactly 1/2.
    const LabeledDataset ds({0, 0, 0, 1, 1, 0, 1, 1}, {1, -1, -1, 1}, 2);
    CHECK_THROWS_AS(adaboost(ds, 5), NumericError);
}

TEST_CASE("adaboost invariants along an intervals run") {
    Rng rng(41);
    auto [ds, concept_fn] = gen_intervals(20, 500, rng);
    const TrainingTrace trace = adaboost(ds, 60);
    REQUIRE(trace.num_rounds() == 60);
    for (const TraceRound& r : trace.rounds()) {
        CHECK(r.dist_sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.miscl_mass_after == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(r.beta == doctest::Approx(r.eps / (1.0 - r.eps)));
        CHECK(r.weight > 0.0);  // eps < 1/2 forces log(1/beta) > 0
    }
    // normalized vote weights are nonnegative and sum to 1
    const ConvexCombination f = trace.final_combination();
    double total = 0.0;
    for (const auto& t : f.terms()) {
        CHECK(t.weight >= 0.0);
        total += t.weight;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("adaboost reaches zero training error on the intervals problem") {
    Rng rng(15);
    Rng gen_rng = rng.child("train");
    auto [ds, concept_fn] = gen_intervals(20, 1000, gen_rng);
    const TrainingTrace trace = adaboost(ds, 300);
    CHECK(evaluate(trace.final_combination(), ds).zero_one_error == 0.0);
}

TEST_CASE("evaluate: agreement and disagreement margins") {
    const LabeledDataset ds({0.1, 0.2, 0.8}, {1, 1, -1}, 1);
    const ConvexCombination agree =
        ConvexCombination::normalized({{1.0, {0, 0.5, Orientation::LE}}});
    const Evaluation ev = evaluate(agree, ds);
    CHECK(ev.zero_one_error == 0.0);
    for (double m : ev.margins) CHECK(m == 1.0);

    const LabeledDataset flipped({0.1, 0.2, 0.8}, {-1, -1, 1}, 1);
    const Evaluation bad = evaluate(agree, flipped);
    CHECK(bad.zero_one_error == 1.0);
    for (double m : bad.margins) CHECK(m == -1.0);
}

TEST_CASE("margins of a 3-stump vote match direct arithmetic") {
    const std::vector<double> xs = {0.05, 0.3, 0.45, 0.7, 0.95};
    const std::vector<int> ys = {1, -1, 1, -1, 1};
    const LabeledDataset ds(xs, ys, 1);
    const std::vector<WeightedStump> terms = {
        {0.5, {0, 0.4, Orientation::LE}},
        {0.3, {0, 0.6, Orientation::GE}},
        {0.2, {0, 0.9, Orientation::LE}},
    };
    const ConvexCombination f = ConvexCombination::normalized(terms);
    const Evaluation ev = evaluate(f, ds);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double h1 = xs[i] <= 0.4 ? 1.0 : -1.0;
        const double h2 = xs[i] >= 0.6 ? 1.0 : -1.0;
        const double h3 = xs[i] <= 0.9 ? 1.0 : -1.0;
        const double expected = ys[i] * (0.5 * h1 + 0.3 * h2 + 0.2 * h3);
        CHECK(ev.margins[i] == doctest::Approx(expected).epsilon(1e-15));
        CHECK(std::abs(ev.margins[i]) <= 1.0 + 1e-9);
    }
}

TEST_CASE("bagging: one round is the single stump") {
    Rng rng(42);
    Rng gen_rng = rng.child("gen");
    const LabeledDataset ds = gen_twonorm(40, 2, gen_rng);
    const TrainingTrace trace = bagging(ds, 1, rng.child("bag"));
    REQUIRE(trace.num_rounds() == 1);
    const ConvexCombination f = trace.final_combination();
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms()[0].weight == 1.0);
}

TEST_CASE("bagging with a forced identical stump reproduces it exactly") {
    // Two cleanly separated clusters: every bootstrap with both labels
    // trains the same zero-error stump at the same midpoint.
    std::vector<double> xs;
    std::vector<int> ys;
    for (int i = 0; i < 15; ++i) {
        xs.push_back(0.0);
        ys.push_back(1);
        xs.push_back(1.0);
        ys.push_back(-1);
    }
    const LabeledDataset ds(xs, ys, 1);
    const TrainingTrace trace = bagging(ds, 8, Rng(43));
    const ConvexCombination f = trace.final_combination();
    const Stump h = trace.rounds().front().stump;
    for (const auto& t : trace.rounds()) {
        REQUIRE(t.stump.threshold == h.threshold);
        REQUIRE(t.stump.orient == h.orient);
    }
    const double probe_pos[] = {0.2}, probe_neg[] = {0.8};
    CHECK(f.value(probe_pos) == static_cast<double>(h.predict(probe_pos)));
    CHECK(f.value(probe_neg) == static_cast<double>(h.predict(probe_neg)));
}

TEST_CASE("bagging beats its own first stump on twonorm") {
    Rng rng(44);
    Rng train_rng = rng.child("train");
    Rng test_rng = rng.child("test");
    const LabeledDataset train = gen_twonorm(300, 20, train_rng);
    const LabeledDataset test = gen_twonorm(2000, 20, test_rng);
    const TrainingTrace trace = bagging(train, 50, rng.child("bag"));
    const double bag_err = evaluate(trace.final_combination(), test).zero_one_error;
    const double one_err = evaluate(trace.combination_at(1), test).zero_one_error;
    CHECK(bag_err < one_err);
}

TEST_CASE("exact oracle: matching stump, constant vote, measure bookkeeping") {
    const IntervalsConcept half({{0.0, 0.5}});
    const ConvexCombination match =
        ConvexCombination::normalized({{1.0, {0, 0.5, Orientation::LE}}});
    CHECK(exact_oracle_1d(match, half, 0.0) == doctest::Approx(0.0));

    const ConvexCombination always_pos =
        ConvexCombination::normalized({{1.0, {0, 2.0, Orientation::LE}}});
    CHECK(exact_oracle_1d(always_pos, half, 0.0) == doctest::Approx(0.5));

    const auto segs = exact_margin_segments(match, half);
    double total = 0.0;
    for (const auto& s : segs) total += s.length;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact oracle agrees with Monte Carlo on random votes") {
    Rng rng(45);
    const IntervalsConcept half = gen_intervals(4, 1, rng).second;
    for (int trial = 0; trial < 10; ++trial) {
        Rng r = rng.child("t", trial);
        std::vector<WeightedStump> terms;
        const int k = 1 + static_cast<int>(r.uniform_index(5));
        for (int s = 0; s < k; ++s)
            terms.push_back({r.uniform(0.1, 1.0),
                             {0, r.uniform01(),
                              r.rademacher() > 0 ? Orientation::LE : Orientation::GE}});
        const ConvexCombination f = ConvexCombination::normalized(std::move(terms));
        for (double delta : {0.0, 0.2}) {
            const double exact = exact_oracle_1d(f, half, delta);
            const std::size_t n = 200000;
            std::size_t hits = 0;
            Rng mc = r.child("mc");
            for (std::size_t i = 0; i < n; ++i) {
                const double x[1] = {mc.uniform01()};
                if (half.label(x[0]) * f.value(x) <= delta) ++hits;
            }
            const double est = static_cast<double>(hits) / n;
            const double se = std::sqrt(std::max(exact * (1 - exact), 1e-9) / n);
            CHECK(std::abs(est - exact) <= 3.5 * se + 1e-6);
        }
    }
}

TEST_CASE("exact oracle rejects multi-feature stumps") {
    const IntervalsConcept half({{0.0, 0.5}});
    const ConvexCombination f =
        ConvexCombination::normalized({{1.0, {1, 0.5, Orientation::LE}}});
    CHECK_THROWS_AS(exact_oracle_1d(f, half, 0.0), NumericError);
}

TEST_CASE("trace save/load round trip") {
    Rng rng(46);
    auto [ds, concept_fn] = gen_intervals(5, 200, rng);
    const TrainingTrace trace = adaboost(ds, 10);
    trace.save("/tmp/stumpbounds_trace.csv", "/tmp/stumpbounds_stumps.csv");
    const TrainingTrace back =
        TrainingTrace::load("/tmp/stumpbounds_trace.csv", "/tmp/stumpbounds_stumps.csv");
    REQUIRE(back.num_rounds() == trace.num_rounds());
    for (std::size_t t = 0; t < trace.num_rounds(); ++t) {
        CHECK(back.rounds()[t].eps == trace.rounds()[t].eps);
        CHECK(back.rounds()[t].weight == trace.rounds()[t].weight);
        CHECK(back.rounds()[t].stump.threshold == trace.rounds()[t].stump.threshold);
    }
    const ConvexCombination f = trace.final_combination();
    f.save("/tmp/stumpbounds_model.csv");
    const ConvexCombination g = ConvexCombination::load("/tmp/stumpbounds_model.csv");
    const double probe[] = {0.37};
    CHECK(f.value(probe) == doctest::Approx(g.value(probe)).epsilon(1e-12));
}
