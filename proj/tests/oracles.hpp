#pragma once

// Independent reference implementations used only by tests: brute-force
// enumerations and dense-grid searches that the fast library paths are
// checked against. Nothing here may call the code path it verifies.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "stumpbounds/dataset.hpp"
#include "stumpbounds/dimension.hpp"
#include "stumpbounds/margins.hpp"
#include "stumpbounds/rng.hpp"
#include "stumpbounds/stump.hpp"

namespace oracles {

using namespace stumpbounds;

/// Weighted error of one stump by direct summation in example order.
inline double stump_error(const LabeledDataset& ds,
                          const std::vector<double>& weights, const Stump& s) {
    double err = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (s.predict(ds.row(i)) != ds.y(i)) err += weights[i];
    return err;
}

/// All candidate stumps: per feature, midpoints between consecutive
/// distinct sorted values plus sentinels below and above; both orientations.
inline std::vector<Stump> all_candidate_stumps(const LabeledDataset& ds) {
    std::vector<Stump> out;
    for (std::size_t f = 0; f < ds.dim(); ++f) {
        std::vector<double> values;
        for (std::size_t i = 0; i < ds.size(); ++i) values.push_back(ds.x(i, f));
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::vector<double> cuts{values.front() - 1.0};
        for (std::size_t j = 0; j + 1 < values.size(); ++j)
            cuts.push_back(0.5 * (values[j] + values[j + 1]));
        cuts.push_back(values.back() + 1.0);
        for (double c : cuts) {
            out.push_back({static_cast<int>(f), c, Orientation::LE});
            out.push_back({static_cast<int>(f), c, Orientation::GE});
        }
    }
    return out;
}

/// Exhaustive minimum-weighted-error stump (ties by candidate order).
inline TrainedStump exhaustive_best_stump(const LabeledDataset& ds,
                                          const std::vector<double>& weights) {
    TrainedStump best;
    best.weighted_error = std::numeric_limits<double>::infinity();
    for (const Stump& s : all_candidate_stumps(ds)) {
        const double e = stump_error(ds, weights, s);
        if (e < best.weighted_error) {
            best.stump = s;
            best.weighted_error = e;
        }
    }
    return best;
}

/// Brute-force sup_h |n^-1 sum eps_i h(X_i)| over every candidate stump.
inline double exhaustive_sign_sup(const LabeledDataset& ds,
                                  const std::vector<int>& eps) {
    double best = 0.0;
    for (const Stump& s : all_candidate_stumps(ds)) {
        double acc = 0.0;
        for (std::size_t i = 0; i < ds.size(); ++i) acc += eps[i] * s.predict(ds.row(i));
        best = std::max(best, std::abs(acc) / static_cast<double>(ds.size()));
    }
    return best;
}

/// Dense-grid + bisection-refined gamma-margin.
inline double grid_gamma_margin(const std::vector<double>& margins, double gamma,
                                std::size_t n, int grid = 100000) {
    const double thr = std::pow(static_cast<double>(n), gamma / 2.0 - 1.0);
    const auto cdf = [&](double d) {
        std::size_t c = 0;
        for (double m : margins)
            if (m <= d) ++c;
        return static_cast<double>(c) / static_cast<double>(margins.size());
    };
    const auto ok = [&](double d) { return std::pow(d, gamma) * cdf(d) <= thr; };
    if (ok(1.0 - 1e-13)) return 1.0;
    double best = 0.0;
    for (int i = 1; i < grid; ++i) {
        const double d = static_cast<double>(i) / grid;
        if (ok(d)) best = d;
    }
    double lo = best, hi = best + 1.0 / grid;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (ok(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

/// Direct bisection on the Example-2 condition P_n{f <= e^(1-n eps)/sqrt(eps)} <= eps.
inline double direct_vc_bound(const std::vector<double>& margins, std::size_t n,
                              double t) {
    const auto cdf = [&](double d) {
        std::size_t c = 0;
        for (double m : margins)
            if (m <= d) ++c;
        return static_cast<double>(c) / static_cast<double>(margins.size());
    };
    const double floor =
        std::max(t, 2.0 * std::log(static_cast<double>(n))) / static_cast<double>(n);
    const auto feasible = [&](double eps) {
        const double delta = std::exp(1.0 - static_cast<double>(n) * eps) / std::sqrt(eps);
        return cdf(delta) <= eps;
    };
    if (feasible(floor)) return floor;
    double lo = floor, hi = 1.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

/// Dense-grid minimization of the dimension-margin objective over Delta.
inline double grid_eps_n(const WeightSpectrum& spectrum, double delta,
                         const DeltaBoundParams& params, int grid = 10000) {
    const double n = static_cast<double>(params.n);
    const double expnt = 2.0 * params.alpha / (params.alpha + 2.0);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        const double Delta = static_cast<double>(i) / grid;
        const int d = delta_dimension(spectrum, Delta);
        if (d > static_cast<int>(params.n)) continue;
        double dim_term = 0.0;
        if (d > 0)
            dim_term = d / n * (std::log(1.0 / delta) + std::log(n * std::exp(2.0) / d));
        const double margin_term =
            std::pow(Delta / delta, expnt) * std::pow(n, -2.0 / (params.alpha + 2.0));
        best = std::min(best, dim_term + margin_term);
    }
    return std::max(best, 2.0 * std::log(n) / n);
}

/// Random profile with roughly half its mass below zero (the regime where
/// the psi-bound floor never binds).
inline std::vector<double> random_margins(Rng& rng, std::size_t n) {
    std::vector<double> m(n);
    for (auto& v : m) v = rng.uniform(-1.0, 1.0);
    return m;
}

/// 36-dimensional {0,1}-feature sample with a planted noisy majority rule,
/// shaped like the chess endgame dataset used in the experiments.
inline LabeledDataset gen_krkp_style(std::size_t n, Rng& rng) {
    const std::size_t d = 36;
    std::vector<double> xs(n * d);
    std::vector<int> ys(n);
    // a fixed sparse rule: 7 informative features with alternating signs
    const int informative[] = {1, 4, 9, 14, 22, 27, 33};
    for (std::size_t i = 0; i < n; ++i) {
        double score = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const double v = rng.uniform01() < 0.5 ? 0.0 : 1.0;
            xs[i * d + j] = v;
        }
        int sgn = 1;
        for (int j : informative) {
            score += sgn * (2.0 * xs[i * d + j] - 1.0);
            sgn = -sgn;
        }
        int y = score >= 0.5 ? 1 : -1;
        if (rng.uniform01() < 0.08) y = -y;  // label noise keeps eps_t in (0, 1/2)
        ys[i] = y;
    }
    return LabeledDataset(std::move(xs), std::move(ys), d);
}

}  // namespace oracles
