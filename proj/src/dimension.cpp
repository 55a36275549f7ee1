#include "stumpbounds/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "stumpbounds/errors.hpp"

namespace stumpbounds {

void WeightSpectrum::build_tails() {
    std::sort(weights_.begin(), weights_.end(), std::greater<double>());
    while (!weights_.empty() && weights_.back() <= 0.0) weights_.pop_back();
    tails_.assign(weights_.size() + 1, 0.0);
    for (std::size_t d = weights_.size(); d-- > 0;)
        tails_[d] = tails_[d + 1] + weights_[d];
}

WeightSpectrum WeightSpectrum::from_combination(const ConvexCombination& f) {
    std::map<std::tuple<int, double, int>, double> merged;
    for (const auto& t : f.terms())
        merged[{t.stump.feature, t.stump.threshold,
                static_cast<int>(t.stump.orient)}] += t.weight;
    WeightSpectrum s;
    s.weights_.reserve(merged.size());
    for (const auto& [key, w] : merged)
        if (w != 0.0) s.weights_.push_back(std::abs(w));
    s.build_tails();
    return s;
}

WeightSpectrum WeightSpectrum::from_weights(std::vector<double> weights) {
    WeightSpectrum s;
    s.weights_.reserve(weights.size());
    for (double w : weights)
        if (w != 0.0) s.weights_.push_back(std::abs(w));
    s.build_tails();
    return s;
}

int delta_dimension(const WeightSpectrum& spectrum, double Delta) {
    if (Delta < 0.0 || Delta > 1.0)
        throw ConfigError("Delta must lie in [0, 1]");
    // tails are strictly decreasing over positive weights; binary search
    // for the first tail <= Delta.
    int lo = 0, hi = static_cast<int>(spectrum.size());
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (spectrum.tail(mid) <= Delta)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

namespace {

struct Terms {
    double dimension;  // d/n (log(1/delta) + log(n e^2/d)), 0 at d = 0
    double margin;     // (Delta/delta)^(2a/(a+2)) n^(-2/(a+2))
};

Terms candidate_terms(std::size_t d, double Delta, double delta,
                      const DeltaBoundParams& params) {
    const double n = static_cast<double>(params.n);
    const double expnt = 2.0 * params.alpha / (params.alpha + 2.0);
    Terms t;
    if (d == 0) {
        t.dimension = 0.0;
    } else {
        const double dd = static_cast<double>(d);
        t.dimension =
            dd / n * (std::log(1.0 / delta) + std::log(n * std::exp(2.0) / dd));
    }
    t.margin = std::pow(Delta / delta, expnt) * std::pow(n, -2.0 / (params.alpha + 2.0));
    return t;
}

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw ConfigError("delta must lie in (0, 1)");
}

}  // namespace

EpsDetail eps_n_detail(const WeightSpectrum& spectrum, double delta,
                       const DeltaBoundParams& params) {
    check_delta(delta);
    const std::size_t d_max = std::min(spectrum.size(), params.n);
    EpsDetail best;
    best.value = std::numeric_limits<double>::infinity();
    for (std::size_t d = 0; d <= d_max; ++d) {
        const double Delta = spectrum.tail(d);
        const Terms t = candidate_terms(d, Delta, delta, params);
        const double v = t.dimension + t.margin;
        if (v < best.value) {
            best.value = v;
            best.dim = static_cast<int>(d);
            best.Delta = Delta;
        }
    }
    const double floor = 2.0 * std::log(static_cast<double>(params.n)) /
                         static_cast<double>(params.n);
    if (best.value < floor) best.value = floor;
    return best;
}

double eps_n(const WeightSpectrum& spectrum, double delta,
             const DeltaBoundParams& params) {
    return eps_n_detail(spectrum, delta, params).value;
}

DeltaHat delta_hat(const MarginProfile& profile, const WeightSpectrum& spectrum,
                   const DeltaBoundParams& params) {
    const auto feasible = [&](double delta) {
        return profile.cdf(delta) <= eps_n(spectrum, delta, params);
    };
    if (feasible(0.5)) return {0.5, true};  // sup over the open interval

    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid))
            lo = mid;
        else
            hi = mid;
    }
    if (lo <= 1e-10) return {0.0, false};
    return {lo, true};
}

double delta_bound(const MarginProfile& profile, const WeightSpectrum& spectrum,
                   const DeltaBoundParams& params) {
    const DeltaHat dh = delta_hat(profile, spectrum, params);
    if (!dh.feasible) return std::numeric_limits<double>::infinity();
    return eps_n(spectrum, dh.delta_hat, params);
}

double weighted_eps(const WeightSpectrum& spectrum, double delta,
                    const DeltaBoundParams& params) {
    check_delta(delta);
    if (params.zeta < 0.0 || params.zeta > 1.0)
        throw ConfigError("zeta must lie in [0, 1]");
    if (!(params.k_scale > 0.0)) throw ConfigError("K must be positive");
    const std::size_t d_max = std::min(spectrum.size(), params.n);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t d = 0; d <= d_max; ++d) {
        const Terms t = candidate_terms(d, spectrum.tail(d), delta, params);
        best = std::min(best,
                        params.zeta * t.dimension + (1.0 - params.zeta) * t.margin);
    }
    return params.k_scale * best;
}

double normalized_eps(const WeightSpectrum& spectrum, double delta,
                      const DeltaBoundParams& params) {
    check_delta(delta);
    if (params.ensemble_size < 1)
        throw ConfigError("ensemble size T must be >= 1");
    if (params.zeta < 0.0 || params.zeta > 1.0)
        throw ConfigError("zeta must lie in [0, 1]");
    if (!(params.k_scale > 0.0)) throw ConfigError("K must be positive");
    const double T = static_cast<double>(params.ensemble_size);
    const std::size_t d_max = std::min(spectrum.size(), params.n);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t d = 0; d <= d_max; ++d) {
        const Terms t = candidate_terms(d, spectrum.tail(d), delta, params);
        best = std::min(best, params.zeta * (t.dimension / T) +
                                  (1.0 - params.zeta) * t.margin);
    }
    return params.k_scale * best;
}

}  // namespace stumpbounds
