#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "stumpbounds/dataset.hpp"
#include "stumpbounds/errors.hpp"
#include "oracles.hpp"

using namespace stumpbounds;

namespace {

std::string temp_path(const std::string& name) {
    return "/tmp/stumpbounds_test_" + name;
}

}  // namespace

TEST_CASE("intervals concept: alternating cells of measure 1/2") {
    Rng rng(1);
    for (int k : {1, 3, 20}) {
        Rng r = rng.child("case", k);
        auto [ds, concept_fn] = gen_intervals(k, 100, r);
        CHECK(ds.dim() == 1);
        CHECK(ds.size() == 100);
        CHECK(concept_fn.positive_measure() == doctest::Approx(0.5).epsilon(1e-12));
        // every label matches the concept exactly
        for (std::size_t i = 0; i < ds.size(); ++i)
            REQUIRE(ds.y(i) == concept_fn.label(ds.x(i, 0)));
    }
}

TEST_CASE("single interval is [0, 0.5]: label +1 iff x <= 0.5") {
    Rng rng(2);
    auto [ds, concept_fn] = gen_intervals(1, 500, rng);
    REQUIRE(concept_fn.intervals().size() == 1);
    CHECK(concept_fn.intervals()[0].lo == 0.0);
    CHECK(concept_fn.intervals()[0].hi == 0.5);
    for (std::size_t i = 0; i < ds.size(); ++i)
        CHECK(ds.y(i) == (ds.x(i, 0) <= 0.5 ? 1 : -1));
    CHECK(concept_fn.label(0.5) == 1);  // closed boundary
}

TEST_CASE("intervals experiment scale: 20 intervals, n=1000") {
    Rng rng(3);
    auto [ds, concept_fn] = gen_intervals(20, 1000, rng);
    CHECK(ds.size() == 1000);
    CHECK(concept_fn.intervals().size() == 20);
    int pos = 0;
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (ds.y(i) == 1) ++pos;
    CHECK(pos > 400);  // measure-1/2 concept
    CHECK(pos < 600);
}

TEST_CASE("generators are pure functions of seed") {
    Rng a(77), b(77);
    auto [d1, c1] = gen_intervals(5, 200, a);
    auto [d2, c2] = gen_intervals(5, 200, b);
    for (std::size_t i = 0; i < d1.size(); ++i) {
        CHECK(d1.x(i, 0) == d2.x(i, 0));
        CHECK(d1.y(i) == d2.y(i));
    }
    Rng t1(78), t2(78);
    const LabeledDataset ta = gen_twonorm(50, 3, t1);
    const LabeledDataset tb = gen_twonorm(50, 3, t2);
    for (std::size_t i = 0; i < ta.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(ta.x(i, j) == tb.x(i, j));
}

TEST_CASE("twonorm class means sit at +-2/sqrt(d)") {
    Rng rng(4);
    const std::size_t n = 40000;
    const LabeledDataset ds = gen_twonorm(n, 1, rng);
    double sum_pos = 0.0;
    std::size_t n_pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (ds.y(i) == 1) {
            sum_pos += ds.x(i, 0);
            ++n_pos;
        }
    }
    const double mean = sum_pos / n_pos;
    const double se = 1.0 / std::sqrt(static_cast<double>(n_pos));
    CHECK(std::abs(mean - 2.0) < 3.0 * se);

    const LabeledDataset d20 = gen_twonorm(100, 20, rng);
    CHECK(d20.dim() == 20);
}

TEST_CASE("split: 90% of 3196 gives 2876/320, multiset preserved") {
    Rng rng(5);
    Rng gen_rng = rng.child("gen");
    const LabeledDataset ds = oracles::gen_krkp_style(3196, gen_rng);
    Rng s1 = rng.child("split");
    auto [train, test] = split(ds, 0.9, s1);
    CHECK(train.size() == 2876);
    CHECK(test.size() == 320);
    CHECK(train.dim() == 36);

    // multiset(train + test) == multiset(input), keyed by full rows
    std::map<std::vector<double>, int> counter;
    const auto add = [&](const LabeledDataset& d, int sign) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            std::vector<double> key(d.row(i).begin(), d.row(i).end());
            key.push_back(d.y(i));
            counter[key] += sign;
        }
    };
    add(ds, 1);
    add(train, -1);
    add(test, -1);
    for (const auto& [k, v] : counter) CHECK(v == 0);

    Rng s2 = rng.child("split");
    auto [train2, test2] = split(ds, 0.9, s2);
    for (std::size_t i = 0; i < train.size(); ++i)
        REQUIRE(train.row(i)[0] == train2.row(i)[0]);  // same seed, same partition
}

TEST_CASE("split of 10 at 0.5 gives 5/5; empty sides rejected") {
    Rng rng(6);
    const LabeledDataset ds = gen_twonorm(10, 2, rng);
    Rng s = rng.child("s");
    auto [a, b] = split(ds, 0.5, s);
    CHECK(a.size() == 5);
    CHECK(b.size() == 5);
    Rng s2 = rng.child("s2");
    CHECK_THROWS_AS(split(ds, 0.05, s2), ConfigError);
}

TEST_CASE("bootstrap: n=1 repeats the row; seeds reproduce") {
    Rng rng(7);
    const LabeledDataset one({0.25}, {1}, 1);
    Rng b = rng.child("b");
    const LabeledDataset r = bootstrap(one, b);
    CHECK(r.size() == 1);
    CHECK(r.x(0, 0) == 0.25);

    const LabeledDataset ds = gen_twonorm(100, 2, rng);
    Rng b1 = rng.child("boot");
    Rng b2 = rng.child("boot");
    const LabeledDataset r1 = bootstrap(ds, b1);
    const LabeledDataset r2 = bootstrap(ds, b2);
    for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1.x(i, 0) == r2.x(i, 0));
}

TEST_CASE("bootstrap keeps ~63.2% distinct rows on average") {
    Rng rng(8);
    const std::size_t n = 500;
    const LabeledDataset ds = gen_twonorm(n, 1, rng);
    double distinct_total = 0.0;
    const int reps = 200;
    for (int r = 0; r < reps; ++r) {
        Rng br = rng.child("rep", r);
        const LabeledDataset bs = bootstrap(ds, br);
        std::set<double> seen;
        for (std::size_t i = 0; i < bs.size(); ++i) seen.insert(bs.x(i, 0));
        distinct_total += static_cast<double>(seen.size()) / n;
    }
    CHECK(std::abs(distinct_total / reps - (1.0 - std::exp(-1.0))) < 0.01);
}

TEST_CASE("csv loader handles a chess-endgame-sized file") {
    Rng rng(9);
    const LabeledDataset ds = oracles::gen_krkp_style(3196, rng);
    const std::string path = temp_path("krkp.csv");
    save_csv(ds, path, false);
    const LabeledDataset back = load_csv(path, -1, "1", false);
    CHECK(back.size() == 3196);
    CHECK(back.dim() == 36);
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(back.y(i) == ds.y(i));
        CHECK(back.x(i, 7) == ds.x(i, 7));
    }
}

TEST_CASE("csv loader errors") {
    {
        const std::string path = temp_path("empty.csv");
        std::ofstream(path).close();
        CHECK_THROWS_WITH_AS(load_csv(path, -1, "1", false),
                             doctest::Contains("no rows"), DataError);
    }
    {
        const std::string path = temp_path("bad.csv");
        std::ofstream out(path);
        out << "0.5,1.25,1\n0.5,oops,-1\n";
        out.close();
        CHECK_THROWS_WITH_AS(load_csv(path, -1, "1", false),
                             doctest::Contains("row 2"), DataError);
    }
    {
        const std::string path = temp_path("ragged.csv");
        std::ofstream out(path);
        out << "0.5,1.25,1\n0.5,-1\n";
        out.close();
        CHECK_THROWS_AS(load_csv(path, -1, "1", false), DataError);
    }
}

TEST_CASE("dataset and concept invariants are enforced") {
    CHECK_THROWS_AS(LabeledDataset({1.0, 2.0}, {1, 0}, 1), DataError);
    CHECK_THROWS_AS(LabeledDataset({1.0}, {1, -1}, 1), DataError);
    CHECK_THROWS_AS(IntervalsConcept({{0.4, 0.2}}), DataError);
    CHECK_THROWS_AS(IntervalsConcept({{0.0, 0.3}, {0.2, 0.5}}), DataError);
}
