#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stumpbounds/config.hpp"
#include "stumpbounds/dataset.hpp"
#include "stumpbounds/ensemble.hpp"

namespace stumpbounds {

/// Per-round table of errors and bounds; column 0 is the round index.
/// Infinite entries serialize as "inf".
struct BoundReport {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column_index(const std::string& name) const;
};

void write_report_csv(const BoundReport& report, const std::string& path);
BoundReport read_report_csv(const std::string& path);

struct PreparedData {
    LabeledDataset train;
    LabeledDataset test;  // empty for the intervals problem (exact oracle)
    std::optional<IntervalsConcept> target;  // intervals concept when applicable
};

/// Materializes the configured dataset for one repetition stream.
PreparedData prepare_data(const ExperimentConfig& config, const Rng& rng);

/**
 * Trains per the config and evaluates every requested bound at each
 * sampled round, averaged over repetitions. Columns: round, train_error,
 * exact_error or test_error, gamma_bound_<g>..., then delta_hat,
 * delta_dim, delta_bound, weighted_bound, normalized_bound, vc_bound as
 * requested.
 */
BoundReport run_experiment(const ExperimentConfig& config);

/// Ratio of empirical to true gamma-margins per round, intervals problem
/// only (the true margin distribution comes from the exact oracle).
BoundReport ratio_experiment(const ExperimentConfig& config);

struct DoomFileOptions {
    std::string model_path;
    std::string data_path;
    bool csv_header = false;
    std::string positive_label = "1";
    double delta = 0.0;  // <= 0: pick by the Rademacher margin bound
    int rademacher_draws = 200;
    double t_param = 1.0;
    std::uint64_t seed = 1;
    std::string output_dir = "doomlp-out";
};

struct DoomFileSummary {
    double delta = 0.0;
    double cost_before = 0.0;
    double cost_after = 0.0;
    double objective_first = 0.0;
    double objective_last = 0.0;
    int support_before = 0;
    int support_after = 0;
    int dim001_before = 0;  // Delta-dimension at Delta = 0.01
    int dim001_after = 0;
    std::string status;
};

/// Runs DOOM-LP on a serialized model + dataset and writes the comparison
/// reports (sorted coefficients, dimension curves, margin CDFs, iteration
/// log, optimized model) into output_dir.
DoomFileSummary run_doomlp_files(const DoomFileOptions& options);

}  // namespace stumpbounds
