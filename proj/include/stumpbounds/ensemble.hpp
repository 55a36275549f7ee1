#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stumpbounds/dataset.hpp"
#include "stumpbounds/rng.hpp"
#include "stumpbounds/stump.hpp"

namespace stumpbounds {

struct WeightedStump {
    double weight = 0.0;
    Stump stump;
};

/**
 * Weighted vote of stumps with sum |weight| normalized to 1, so the vote
 * f(x) = sum_t w_t h_t(x) always lies in [-1, 1].
 */
class ConvexCombination {
public:
    ConvexCombination() = default;

    /// Normalizes by sum |w|; throws NumericError when all weights are zero.
    static ConvexCombination normalized(std::vector<WeightedStump> terms);

    double value(std::span<const double> x) const;

    const std::vector<WeightedStump>& terms() const { return terms_; }
    double total_abs_weight() const;
    bool all_one_dimensional() const;

    void save(const std::string& path) const;
    static ConvexCombination load(const std::string& path);

private:
    std::vector<WeightedStump> terms_;
};

enum class StopReason {
    Completed,          // ran all requested rounds
    WeakLearnerFailed,  // weighted error reached 1/2
};

struct TraceRound {
    int round = 0;  // 1-based
    Stump stump;
    double eps = 0.0;     // weighted training error of this round's stump
    double beta = 0.0;    // eps / (1 - eps)
    double weight = 0.0;  // unnormalized vote weight (log(1/beta) or 1)
    bool eps_clamped = false;
    // Diagnostics of the weight update, recorded for invariant checks:
    double dist_sum = 0.0;           // sum of D_t entering the round
    double miscl_mass_after = 0.0;   // mass of this round's mistakes under D_{t+1}
};

/**
 * Round-by-round record of a boosting/bagging run. Combined classifiers are
 * formed lazily: weights are stored unnormalized and normalized at query
 * time. Immutable once built.
 */
class TrainingTrace {
public:
    TrainingTrace(std::vector<TraceRound> rounds, StopReason reason)
        : rounds_(std::move(rounds)), reason_(reason) {}

    const std::vector<TraceRound>& rounds() const { return rounds_; }
    StopReason stop_reason() const { return reason_; }
    std::size_t num_rounds() const { return rounds_.size(); }

    /// Normalized vote of the first t rounds (1 <= t <= num_rounds()).
    ConvexCombination combination_at(std::size_t t) const;
    ConvexCombination final_combination() const;

    /// round,eps,beta,weight per line; stumps go to a parallel file.
    void save(const std::string& trace_path, const std::string& stumps_path) const;
    static TrainingTrace load(const std::string& trace_path,
                              const std::string& stumps_path);

private:
    std::vector<TraceRound> rounds_;
    StopReason reason_;
};

/**
 * AdaBoost with exact decision-stump base learners. Starts from uniform
 * example weights; each round multiplies correctly classified examples'
 * weights by beta_t = eps_t/(1-eps_t) and renormalizes. A round with
 * eps_t = 0 is clamped to 1e-10 so separable problems still produce
 * multi-round traces; eps_t >= 1/2 stops the run early.
 */
TrainingTrace adaboost(const LabeledDataset& ds, int rounds);

/// Bagging: each round trains a stump on an independent bootstrap sample;
/// all vote weights are equal.
TrainingTrace bagging(const LabeledDataset& ds, int rounds, const Rng& rng);

struct Evaluation {
    std::vector<double> margins;  // y_i f(x_i), in example order
    double zero_one_error = 0.0;  // fraction with margin <= 0
};

Evaluation evaluate(const ConvexCombination& f, const LabeledDataset& ds);

/// One piece of the exact margin distribution: f0(x) f(x) equals `value`
/// on a set of Lebesgue measure `length`.
struct MarginSegment {
    double value;
    double length;
};

/**
 * Exact margin distribution of a 1-D stump vote against an intervals
 * concept under the uniform distribution on [0,1]: f is piecewise constant
 * between stump thresholds, so the distribution of f0(x) f(x) is a finite
 * list of (value, length) pieces. Throws NumericError on non-1-D stumps.
 */
std::vector<MarginSegment> exact_margin_segments(const ConvexCombination& f,
                                                 const IntervalsConcept& target_concept);

/// P{ f0(x) f(x) <= delta } under the uniform distribution on [0,1];
/// delta = 0 gives the exact generalization error.
double exact_oracle_1d(const ConvexCombination& f,
                       const IntervalsConcept& target_concept, double delta);

}  // namespace stumpbounds
