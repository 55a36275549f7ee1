#include "stumpbounds/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "stumpbounds/errors.hpp"

namespace stumpbounds {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "dataset",        "intervals",        "n",
    "dim",            "test-n",           "csv-path",
    "label-column",   "positive-label",   "csv-header",
    "train-fraction", "algorithm",        "rounds",
    "gamma-list",     "include-gamma-min","delta-bound",
    "weighted-bound", "normalized-bound", "vc-bound",
    "zeta",           "k-scale",          "t",
    "cover-exponent", "seed",             "repetitions",
    "every",          "output-dir",
};

ExperimentConfig parse(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    std::string unknown;
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!kKnownKeys.count(key)) unknown += (unknown.empty() ? "" : ", ") + key;
    }
    if (!unknown.empty())
        throw ConfigError("unknown config keys: " + unknown);

    ExperimentConfig c;
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("dataset", c.dataset);
    get("intervals", c.intervals);
    get("n", c.n);
    get("dim", c.dim);
    get("test-n", c.test_n);
    get("csv-path", c.csv_path);
    get("label-column", c.label_column);
    get("positive-label", c.positive_label);
    get("csv-header", c.csv_header);
    get("train-fraction", c.train_fraction);
    get("algorithm", c.algorithm);
    get("rounds", c.rounds);
    get("gamma-list", c.gamma_list);
    get("include-gamma-min", c.include_gamma_min);
    get("delta-bound", c.bound_delta);
    get("weighted-bound", c.bound_weighted);
    get("normalized-bound", c.bound_normalized);
    get("vc-bound", c.bound_vc);
    get("zeta", c.zeta);
    get("k-scale", c.k_scale);
    get("t", c.t_param);
    get("cover-exponent", c.cover_exponent);
    get("seed", c.seed);
    get("repetitions", c.repetitions);
    get("every", c.every);
    get("output-dir", c.output_dir);
    c.validate();
    return c;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        return parse(j);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field has the wrong type: ") + e.what());
    }
}

void ExperimentConfig::validate() const {
    if (dataset != "intervals" && dataset != "twonorm" && dataset != "csv")
        throw ConfigError("dataset must be intervals, twonorm, or csv");
    if (dataset == "csv" && csv_path.empty())
        throw ConfigError("csv dataset requires csv-path");
    if (algorithm != "adaboost" && algorithm != "bagging")
        throw ConfigError("algorithm must be adaboost or bagging");
    if (rounds < 1) throw ConfigError("rounds must be >= 1");
    if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
    if (every < 1) throw ConfigError("every must be >= 1");
    for (double g : gamma_list)
        if (!(g > 0.0 && g <= 1.0))
            throw ConfigError("gamma-list values must lie in (0, 1]");
    if (zeta < 0.0 || zeta > 1.0) throw ConfigError("zeta must lie in [0, 1]");
    if (!(k_scale > 0.0)) throw ConfigError("k-scale must be positive");
    if (!(t_param > 0.0)) throw ConfigError("t must be positive");
    if (cover_exponent < 0.0) throw ConfigError("cover-exponent must be >= 0");
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw ConfigError("train-fraction must lie in (0, 1)");
}

}  // namespace stumpbounds
