#include "stumpbounds/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace stumpbounds::kernels {

namespace {

// Canonical weighted error of a fixed stump, summed in example order.
double direct_weighted_error(const LabeledDataset& ds,
                             std::span<const double> weights, const Stump& s) {
    double err = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (s.predict(ds.row(i)) != ds.y(i)) err += weights[i];
    return err;
}

// Best stump on one feature. Thresholds are visited in increasing order
// and LE is tried before GE at each threshold, so the first strict
// improvement wins and the result honors the global tie-break.
TrainedStump scan_feature(const LabeledDataset& ds,
                          std::span<const double> weights,
                          std::span<const std::uint32_t> idx, int feature) {
    const std::size_t n = ds.size();
    double weight_total = 0.0;
    double err_le = 0.0;  // error of the LE stump with threshold below all points
    for (std::size_t i = 0; i < n; ++i) {
        weight_total += weights[i];
        if (ds.y(i) == 1) err_le += weights[i];
    }

    const double lo_sentinel = ds.x(idx.front(), feature) - 1.0;
    const double hi_sentinel = ds.x(idx.back(), feature) + 1.0;

    TrainedStump best;
    best.stump = {feature, lo_sentinel, Orientation::LE};
    best.weighted_error = err_le;

    auto consider = [&](double threshold, double e_le) {
        if (e_le < best.weighted_error) {
            best.stump = {feature, threshold, Orientation::LE};
            best.weighted_error = e_le;
        }
        const double e_ge = weight_total - e_le;
        if (e_ge < best.weighted_error) {
            best.stump = {feature, threshold, Orientation::GE};
            best.weighted_error = e_ge;
        }
    };

    consider(lo_sentinel, err_le);
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t i = idx[j];
        // Example idx[j] crosses to the predicted-+1 side of the LE stump.
        err_le += ds.y(i) == 1 ? -weights[i] : weights[i];
        const double v = ds.x(i, feature);
        if (j + 1 < n) {
            const double next = ds.x(idx[j + 1], feature);
            if (next > v) consider(0.5 * (v + next), err_le);
        } else {
            consider(hi_sentinel, err_le);
        }
    }
    return best;
}

void reduce_feature_bests(const LabeledDataset& ds,
                          std::span<const double> weights,
                          std::span<const TrainedStump> per_feature,
                          TrainedStump& out) {
    out = per_feature.front();
    for (std::size_t f = 1; f < per_feature.size(); ++f)
        if (per_feature[f].weighted_error < out.weighted_error)
            out = per_feature[f];
    // Report the canonical error of the winner, summed in example order.
    out.weighted_error = direct_weighted_error(ds, weights, out.stump);
}

void fill_signs(const Rng& rng, int draw, std::span<int> eps) {
    Rng r = rng.child("rademacher", static_cast<std::uint64_t>(draw));
    for (auto& e : eps) e = r.rademacher();
}

}  // namespace

FeatureOrder FeatureOrder::build(const LabeledDataset& ds) {
    FeatureOrder fo;
    fo.order.resize(ds.dim());
    for (std::size_t f = 0; f < ds.dim(); ++f) {
        auto& idx = fo.order[f];
        idx.resize(ds.size());
        std::iota(idx.begin(), idx.end(), 0u);
        std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
            const double xa = ds.x(a, f), xb = ds.x(b, f);
            return xa < xb || (xa == xb && a < b);
        });
    }
    return fo;
}

TrainedStump best_stump_serial(const LabeledDataset& ds,
                               std::span<const double> weights,
                               const FeatureOrder& order) {
    std::vector<TrainedStump> per_feature(ds.dim());
    for (std::size_t f = 0; f < ds.dim(); ++f)
        per_feature[f] =
            scan_feature(ds, weights, order.order[f], static_cast<int>(f));
    TrainedStump best;
    reduce_feature_bests(ds, weights, per_feature, best);
    return best;
}

TrainedStump best_stump_parallel(const LabeledDataset& ds,
                                 std::span<const double> weights,
                                 const FeatureOrder& order) {
    const int d = static_cast<int>(ds.dim());
    std::vector<TrainedStump> per_feature(ds.dim());
#pragma omp parallel for schedule(dynamic)
    for (int f = 0; f < d; ++f)
        per_feature[f] = scan_feature(ds, weights, order.order[f], f);
    TrainedStump best;
    reduce_feature_bests(ds, weights, per_feature, best);
    return best;
}

namespace {

double one_margin(const LabeledDataset& ds, std::span<const Stump> stumps,
                  std::span<const double> weights, std::size_t i) {
    const auto row = ds.row(i);
    double f = 0.0;
    for (std::size_t k = 0; k < stumps.size(); ++k)
        f += weights[k] * stumps[k].predict(row);
    return ds.y(i) * f;
}

}  // namespace

void margins_serial(const LabeledDataset& ds, std::span<const Stump> stumps,
                    std::span<const double> weights,
                    std::span<double> out_margins) {
    for (std::size_t i = 0; i < ds.size(); ++i)
        out_margins[i] = one_margin(ds, stumps, weights, i);
}

void margins_parallel(const LabeledDataset& ds, std::span<const Stump> stumps,
                      std::span<const double> weights,
                      std::span<double> out_margins) {
    const auto n = static_cast<std::ptrdiff_t>(ds.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out_margins[i] = one_margin(ds, stumps, weights, static_cast<std::size_t>(i));
}

double stump_sign_sup(const LabeledDataset& ds, const FeatureOrder& order,
                      std::span<const int> eps) {
    const std::size_t n = ds.size();
    long long total = 0;
    for (int e : eps) total += e;

    // sum_i eps_i h(x_i) for the LE stump cutting after sorted rank j is
    // 2 * prefix(j) - total; GE is its negation, so |.| covers both.
    long long best = std::llabs(total);  // j = 0 and j = n sentinels
    for (std::size_t f = 0; f < ds.dim(); ++f) {
        const auto& idx = order.order[f];
        long long prefix = 0;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            prefix += eps[idx[j]];
            if (ds.x(idx[j + 1], f) > ds.x(idx[j], f))
                best = std::max(best, std::llabs(2 * prefix - total));
        }
    }
    return static_cast<double>(best) / static_cast<double>(n);
}

void rademacher_sups_serial(const LabeledDataset& ds,
                            const FeatureOrder& order, int num_draws,
                            const Rng& rng, std::span<double> out_sups) {
    std::vector<int> eps(ds.size());
    for (int t = 0; t < num_draws; ++t) {
        fill_signs(rng, t, eps);
        out_sups[t] = stump_sign_sup(ds, order, eps);
    }
}

void rademacher_sups_parallel(const LabeledDataset& ds,
                              const FeatureOrder& order, int num_draws,
                              const Rng& rng, std::span<double> out_sups) {
#pragma omp parallel
    {
        std::vector<int> eps(ds.size());
#pragma omp for schedule(static)
        for (int t = 0; t < num_draws; ++t) {
            fill_signs(rng, t, eps);
            out_sups[t] = stump_sign_sup(ds, order, eps);
        }
    }
}

}  // namespace stumpbounds::kernels
