#include "stumpbounds/stump.hpp"

#include <cmath>

#include "stumpbounds/errors.hpp"
#include "stumpbounds/kernels.hpp"

namespace stumpbounds {

std::string orientation_name(Orientation o) {
    return o == Orientation::LE ? "LE" : "GE";
}

Orientation orientation_from_name(const std::string& name) {
    if (name == "LE") return Orientation::LE;
    if (name == "GE") return Orientation::GE;
    throw DataError("unknown stump orientation: '" + name + "'");
}

TrainedStump train_stump(const LabeledDataset& ds,
                         std::span<const double> weights) {
    if (weights.size() != ds.size())
        throw NumericError("weight vector length does not match dataset");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw NumericError("example weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw NumericError("example weights must sum to 1 within 1e-12");

    const auto order = kernels::FeatureOrder::build(ds);
    return kernels::best_stump_parallel(ds, weights, order);
}

RademacherEstimate rademacher_complexity(const LabeledDataset& ds,
                                         int num_draws, const Rng& rng) {
    if (num_draws < 1) throw ConfigError("rademacher draws must be >= 1");
    const auto order = kernels::FeatureOrder::build(ds);
    std::vector<double> sups(num_draws);
    kernels::rademacher_sups_parallel(ds, order, num_draws, rng, sups);

    double mean = 0.0;
    for (double s : sups) mean += s;
    mean /= num_draws;
    double var = 0.0;
    for (double s : sups) var += (s - mean) * (s - mean);
    var = num_draws > 1 ? var / (num_draws - 1) : 0.0;
    return {mean, std::sqrt(var / num_draws)};
}

int stump_vc_dim(int d) {
    if (d < 1) throw ConfigError("dimension must be >= 1");
    // n = 1 satisfies the inequality vacuously (1 >= 1); the scan starts at
    // n = 2, which gives 2 for d = 1.
    for (int n = 2; n < 64; ++n) {
        const unsigned long long lhs = 1ULL << (n - 1);
        const unsigned long long rhs =
            static_cast<unsigned long long>(n - 1) * static_cast<unsigned long long>(d) + 1ULL;
        if (lhs >= rhs) return n;
    }
    return 64;
}

StumpClassMeta StumpClassMeta::for_dim(int d) {
    const int vc = stump_vc_dim(d);
    return for_dim(d, 2.0 * (vc - 1));
}

StumpClassMeta StumpClassMeta::for_dim(int d, double cover_exponent_override) {
    StumpClassMeta m;
    m.dim = d;
    m.vc_dim = stump_vc_dim(d);
    m.cover_exponent = cover_exponent_override;
    if (m.cover_exponent <= 0.0)
        throw ConfigError("cover exponent must be positive");
    m.alpha = 2.0 * m.cover_exponent / (m.cover_exponent + 2.0);
    return m;
}

double StumpClassMeta::gamma_min() const {
    return 2.0 * (vc_dim - 1) / (2.0 * vc_dim - 1.0);
}

}  // namespace stumpbounds
