#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stumpbounds/rng.hpp"

namespace stumpbounds {

/**
 * A fixed sample of labeled examples: an n x d feature matrix (row-major)
 * with labels in {-1, +1}. Immutable after construction; safe to share
 * read-only across threads.
 */
class LabeledDataset {
public:
    LabeledDataset() = default;

    /// Validates shape and labels; throws DataError on violation.
    LabeledDataset(std::vector<double> features, std::vector<int> labels,
                   std::size_t dim);

    std::size_t size() const { return labels_.size(); }
    std::size_t dim() const { return dim_; }

    double x(std::size_t i, std::size_t j) const {
        return features_[i * dim_ + j];
    }
    int y(std::size_t i) const { return labels_[i]; }

    std::span<const double> row(std::size_t i) const {
        return {features_.data() + i * dim_, dim_};
    }
    std::span<const int> labels() const { return labels_; }

private:
    std::vector<double> features_;
    std::vector<int> labels_;
    std::size_t dim_ = 0;
};

/// Closed subinterval of [0, 1].
struct Interval {
    double lo;
    double hi;
};

/**
 * Target concept for the one-dimensional intervals problem: +1 on the union
 * of disjoint closed intervals, -1 elsewhere. Points on an endpoint are
 * labeled +1 (closed intervals).
 */
class IntervalsConcept {
public:
    explicit IntervalsConcept(std::vector<Interval> intervals);

    int label(double x) const;
    const std::vector<Interval>& intervals() const { return intervals_; }

    /// Total length of the +1 region.
    double positive_measure() const;

private:
    std::vector<Interval> intervals_;  // disjoint, sorted by lo
};

/**
 * Intervals-problem sample: X uniform on [0, 1], labels from the concept
 * formed by dividing [0, 1] into 2k equal cells and taking every other
 * cell starting with the first, so the +1 region has measure exactly 1/2.
 */
std::pair<LabeledDataset, IntervalsConcept> gen_intervals(int num_intervals,
                                                          std::size_t n,
                                                          Rng& rng);

/// Two-class Gaussian sample: class +1 ~ N(mu, I), class -1 ~ N(-mu, I),
/// mu = (2/sqrt(d), ..., 2/sqrt(d)), equal class probability.
LabeledDataset gen_twonorm(std::size_t n, std::size_t d, Rng& rng);

/**
 * Loads a dataset from a numeric CSV file. label_column selects the label
 * (negative means last column); the label token maps to +1 when it equals
 * positive_label, otherwise -1. All other columns must parse as numbers.
 * Throws DataError naming the offending row and column.
 */
LabeledDataset load_csv(const std::string& path, int label_column,
                        const std::string& positive_label, bool has_header);

/// Writes features then label (last column); optional header row.
void save_csv(const LabeledDataset& ds, const std::string& path,
              bool with_header);

/// Disjoint uniformly-random partition with floor(n * train_fraction)
/// training rows. Throws ConfigError when either side would be empty.
std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& ds,
                                                double train_fraction,
                                                Rng& rng);

/// n draws with replacement, uniform over rows.
LabeledDataset bootstrap(const LabeledDataset& ds, Rng& rng);

}  // namespace stumpbounds
