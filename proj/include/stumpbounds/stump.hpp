#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "stumpbounds/dataset.hpp"
#include "stumpbounds/rng.hpp"

namespace stumpbounds {

/// Which inequality the stump tests. LE predicts +1 when x_i <= c,
/// GE predicts +1 when x_i >= c.
enum class Orientation { LE, GE };

/**
 * Axis-aligned threshold classifier with outputs in {-1, +1}.
 * A point exactly on the threshold satisfies both orientations (closed
 * inequalities); training thresholds are midpoints between distinct
 * feature values, so training data never sits on a threshold.
 */
struct Stump {
    int feature = 0;
    double threshold = 0.0;
    Orientation orient = Orientation::LE;

    int predict(std::span<const double> x) const {
        const double v = x[static_cast<std::size_t>(feature)];
        if (orient == Orientation::LE) return v <= threshold ? 1 : -1;
        return v >= threshold ? 1 : -1;
    }
};

std::string orientation_name(Orientation o);
Orientation orientation_from_name(const std::string& name);

struct TrainedStump {
    Stump stump;
    double weighted_error = 0.0;
};

/**
 * Exact weighted-error-minimizing base learner: scans all features, all
 * midpoint thresholds between consecutive distinct sorted values plus one
 * sentinel below the minimum and one above the maximum, both orientations.
 * Ties break lexicographically on (feature, threshold, LE < GE).
 *
 * weights must be nonnegative and sum to 1 within 1e-12.
 */
TrainedStump train_stump(const LabeledDataset& ds,
                         std::span<const double> weights);

struct RademacherEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/**
 * Monte-Carlo estimate of the stump-class Rademacher complexity
 * sup_h |n^-1 sum_i eps_i h(X_i)| averaged over num_draws sign vectors.
 * The inner supremum is computed exactly per draw by prefix scans over
 * each feature's sort order. Draw order is deterministic in the seed.
 */
RademacherEstimate rademacher_complexity(const LabeledDataset& ds,
                                         int num_draws, const Rng& rng);

/**
 * VC-dimension estimate for stumps on R^d: the smallest n >= 2 with
 * 2^(n-1) >= (n-1)d + 1. The scan starts at n = 2 because the inequality
 * is vacuously true at n = 1. For d = 1 this yields 2.
 */
int stump_vc_dim(int d);

/**
 * Entropy/complexity parameters of the stump class on R^d.
 * cover_exponent defaults to 2(vc_dim - 1); alpha = 2V/(V+2) with
 * V = cover_exponent, which for the default equals 2(vc_dim-1)/vc_dim.
 */
struct StumpClassMeta {
    int dim = 1;
    int vc_dim = 2;
    double cover_exponent = 2.0;
    double alpha = 1.0;

    static StumpClassMeta for_dim(int d);
    static StumpClassMeta for_dim(int d, double cover_exponent_override);

    /// Smallest gamma usable in the gamma-margin bounds:
    /// 2(vc_dim - 1)/(2 vc_dim - 1).
    double gamma_min() const;
};

}  // namespace stumpbounds
