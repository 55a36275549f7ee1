#pragma once

#include <cstddef>
#include <vector>

#include "stumpbounds/ensemble.hpp"
#include "stumpbounds/margins.hpp"

namespace stumpbounds {

/**
 * Absolute coefficients of a stump vote, merged by identical stump and
 * sorted in nonincreasing order, with the suffix sums
 * tail(d) = sum_{j > d} |lambda_j| precomputed for d = 0..N. The greedy
 * largest-first ordering minimizes the dimension for every threshold.
 */
class WeightSpectrum {
public:
    /// Merges terms with identical (feature, threshold, orientation),
    /// drops merged weights that cancel to zero.
    static WeightSpectrum from_combination(const ConvexCombination& f);

    /// Uses |weights| as given (no stump identities to merge).
    static WeightSpectrum from_weights(std::vector<double> weights);

    std::size_t size() const { return weights_.size(); }
    double total() const { return tails_.front(); }
    double tail(std::size_t d) const { return tails_[d]; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> weights_;  // nonincreasing, positive
    std::vector<double> tails_;    // tails_[d] = sum_{j >= d} weights_[j]; size N+1
    void build_tails();
};

/// Smallest d >= 0 with tail(d) <= Delta. Delta must lie in [0, 1].
int delta_dimension(const WeightSpectrum& spectrum, double Delta);

/**
 * Parameters of the dimension-margin bounds. alpha is the entropy exponent
 * 2V/(V+2); zeta and k_scale steer the weighted variants; ensemble_size is
 * the T of the normalized variant.
 */
struct DeltaBoundParams {
    double alpha = 1.0;
    std::size_t n = 1;
    double t = 1.0;
    double zeta = 1.0;
    double k_scale = 1.0;
    std::size_t ensemble_size = 1;
};

struct EpsDetail {
    double value = 0.0;
    int dim = 0;         // dimension at the optimizing candidate
    double Delta = 0.0;  // optimizing tail threshold
};

/**
 * The dimension-margin functional
 *
 *   inf_Delta [ d/n (log(1/delta) + log(n e^2/d))
 *               + (Delta/delta)^(2a/(a+2)) n^(-2/(a+2)) ]  v  2 log n / n,
 *
 * where d = d(f; Delta) ranges over dimensions attainable with d <= n.
 * The infimum is attained on the finite candidate set Delta = tail(d):
 * the dimension is piecewise constant in Delta and the margin term is
 * increasing in Delta, so each attainable d is best at its smallest
 * Delta. The d = 0 dimension term is 0 by continuous extension.
 */
double eps_n(const WeightSpectrum& spectrum, double delta,
             const DeltaBoundParams& params);
EpsDetail eps_n_detail(const WeightSpectrum& spectrum, double delta,
                       const DeltaBoundParams& params);

struct DeltaHat {
    double delta_hat = 0.0;
    bool feasible = true;
};

/**
 * sup{ delta in (0, 1/2) : P_n{f <= delta} <= eps_n(f; delta) }. The CDF is
 * nondecreasing and eps_n nonincreasing in delta, so the feasible set is a
 * down-interval and bisection to 1e-10 finds its supremum; returns 1/2 when
 * feasible throughout, and 0 with feasible=false when no feasible point
 * above 1e-10 exists.
 */
DeltaHat delta_hat(const MarginProfile& profile, const WeightSpectrum& spectrum,
                   const DeltaBoundParams& params);

/// eps_n(f; delta_hat(f)); +infinity when delta_hat is flagged 0.
double delta_bound(const MarginProfile& profile, const WeightSpectrum& spectrum,
                   const DeltaBoundParams& params);

/**
 * Weighted variant: K * inf_Delta [ zeta * (dimension term)
 * + (1 - zeta) * (margin term) ], same candidate set, no 2 log n / n floor.
 */
double weighted_eps(const WeightSpectrum& spectrum, double delta,
                    const DeltaBoundParams& params);

/// Normalized variant: dimension term scaled by d/T in the leading factor
/// only (the log argument keeps d).
double normalized_eps(const WeightSpectrum& spectrum, double delta,
                      const DeltaBoundParams& params);

}  // namespace stumpbounds
