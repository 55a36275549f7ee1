#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stumpbounds {

/**
 * One experiment: dataset source, training algorithm, and the bounds to
 * evaluate per round. Parsed from a flat kebab-case JSON document; unknown
 * keys are rejected by name. See README for the schema.
 */
struct ExperimentConfig {
    // Dataset: "intervals", "twonorm", or "csv".
    std::string dataset = "intervals";
    int intervals = 20;
    std::size_t n = 1000;  // training-sample size for generated data
    std::size_t dim = 20;  // twonorm dimension
    std::size_t test_n = 20000;
    std::string csv_path;
    int label_column = -1;  // negative: last column
    std::string positive_label = "1";
    bool csv_header = false;
    double train_fraction = 0.9;

    // Training.
    std::string algorithm = "adaboost";  // or "bagging"
    int rounds = 100;

    // Bounds.
    std::vector<double> gamma_list;
    bool include_gamma_min = false;
    bool bound_delta = false;
    bool bound_weighted = false;
    bool bound_normalized = false;
    bool bound_vc = false;
    double zeta = 0.1;
    double k_scale = 1.0;
    double t_param = 1.0;
    double cover_exponent = 0.0;  // 0: default 2(vc_dim - 1)

    // Execution.
    std::uint64_t seed = 1;
    int repetitions = 1;
    int every = 1;  // evaluate bounds every k-th round
    std::string output_dir = "out";

    static ExperimentConfig from_json_file(const std::string& path);
    static ExperimentConfig from_json_text(const std::string& text);

    void validate() const;
};

}  // namespace stumpbounds
