#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stumpbounds/dataset.hpp"
#include "stumpbounds/stump.hpp"

namespace stumpbounds::kernels {

/**
 * Data-parallel inner loops, each in a serial and an OpenMP variant.
 * The parallel variants partition work by index and reduce in a fixed
 * order, so they produce bit-identical results to the serial ones for
 * any thread count; the serial variants are the reference used by tests
 * and by the benchmark target.
 */

/// Sort order of example indices per feature, computed once per dataset
/// and reused across scans.
struct FeatureOrder {
    std::vector<std::vector<std::uint32_t>> order;  // [feature][rank] -> example

    static FeatureOrder build(const LabeledDataset& ds);
};

TrainedStump best_stump_serial(const LabeledDataset& ds,
                               std::span<const double> weights,
                               const FeatureOrder& order);
TrainedStump best_stump_parallel(const LabeledDataset& ds,
                                 std::span<const double> weights,
                                 const FeatureOrder& order);

/// Margins y_i * sum_k w_k h_k(x_i) for a fixed stump list.
void margins_serial(const LabeledDataset& ds, std::span<const Stump> stumps,
                    std::span<const double> weights,
                    std::span<double> out_margins);
void margins_parallel(const LabeledDataset& ds, std::span<const Stump> stumps,
                      std::span<const double> weights,
                      std::span<double> out_margins);

/// Exact sup_h |n^-1 sum eps_i h(X_i)| over all stumps for one sign vector.
double stump_sign_sup(const LabeledDataset& ds, const FeatureOrder& order,
                      std::span<const int> eps);

/// Per-draw suprema for num_draws Rademacher vectors; draw i uses the
/// child stream (label "rademacher", index i) of the given generator.
void rademacher_sups_serial(const LabeledDataset& ds,
                            const FeatureOrder& order, int num_draws,
                            const Rng& rng, std::span<double> out_sups);
void rademacher_sups_parallel(const LabeledDataset& ds,
                              const FeatureOrder& order, int num_draws,
                              const Rng& rng, std::span<double> out_sups);

}  // namespace stumpbounds::kernels
