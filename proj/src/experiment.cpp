#include "stumpbounds/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>

#include "stumpbounds/csv.hpp"
#include "stumpbounds/dimension.hpp"
#include "stumpbounds/doomlp.hpp"
#include "stumpbounds/errors.hpp"
#include "stumpbounds/margins.hpp"

namespace stumpbounds {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::size_t BoundReport::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw DataError("report has no column named '" + name + "'");
}

void write_report_csv(const BoundReport& report, const std::string& path) {
    CsvWriter w(path);
    w.write_row(report.columns);
    std::vector<std::string> fields(report.columns.size());
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) fields[i] = format_number(row[i]);
        w.write_row(fields);
    }
}

BoundReport read_report_csv(const std::string& path) {
    const CsvTable table = read_csv(path);
    if (table.rows.empty()) throw DataError(path + ": empty CSV");
    BoundReport report;
    report.columns = table.rows.front();
    for (std::size_t r = 1; r < table.rows.size(); ++r) {
        std::vector<double> row;
        row.reserve(table.rows[r].size());
        for (const auto& f : table.rows[r]) {
            if (f == "inf")
                row.push_back(kInf);
            else if (f == "-inf")
                row.push_back(-kInf);
            else
                row.push_back(std::stod(f));
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

PreparedData prepare_data(const ExperimentConfig& config, const Rng& rng) {
    if (config.dataset == "intervals") {
        Rng train_rng = rng.child("train");
        auto [train, target_concept] = gen_intervals(config.intervals, config.n, train_rng);
        return {std::move(train), LabeledDataset{}, std::move(target_concept)};
    }
    if (config.dataset == "twonorm") {
        Rng train_rng = rng.child("train");
        Rng test_rng = rng.child("test");
        return {gen_twonorm(config.n, config.dim, train_rng),
                gen_twonorm(config.test_n, config.dim, test_rng), std::nullopt};
    }
    LabeledDataset full = load_csv(config.csv_path, config.label_column,
                                   config.positive_label, config.csv_header);
    Rng split_rng = rng.child("split");
    auto [train, test] = split(full, config.train_fraction, split_rng);
    return {std::move(train), std::move(test), std::nullopt};
}

namespace {

std::vector<double> effective_gammas(const ExperimentConfig& config,
                                     const StumpClassMeta& meta) {
    std::vector<double> gammas = config.gamma_list;
    if (config.include_gamma_min) gammas.push_back(meta.gamma_min());
    return gammas;
}

StumpClassMeta meta_for(const ExperimentConfig& config, std::size_t dim) {
    const int d = static_cast<int>(dim);
    return config.cover_exponent > 0.0
               ? StumpClassMeta::for_dim(d, config.cover_exponent)
               : StumpClassMeta::for_dim(d);
}

std::vector<int> eval_rounds(const ExperimentConfig& config, std::size_t trained) {
    std::vector<int> rounds;
    for (int t = 1; t <= static_cast<int>(trained); ++t)
        if (t % config.every == 0 || t == static_cast<int>(trained))
            rounds.push_back(t);
    return rounds;
}

TrainingTrace train_trace(const ExperimentConfig& config, const PreparedData& data,
                          const Rng& rng) {
    if (config.algorithm == "adaboost") return adaboost(data.train, config.rounds);
    return bagging(data.train, config.rounds, rng.child("bagging"));
}

StepCdf cdf_from_segments(const std::vector<MarginSegment>& segs) {
    StepCdf cdf;
    double cum = 0.0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        cum += segs[i].length;
        if (!cdf.values.empty() && cdf.values.back() == segs[i].value)
            cdf.cum.back() = cum;
        else {
            cdf.values.push_back(segs[i].value);
            cdf.cum.push_back(cum);
        }
    }
    return cdf;
}

}  // namespace

BoundReport run_experiment(const ExperimentConfig& config) {
    config.validate();

    BoundReport report;
    std::vector<std::vector<double>> sum_rows;

    for (int rep = 0; rep < config.repetitions; ++rep) {
        const Rng rep_rng = Rng(config.seed).child("rep", static_cast<std::uint64_t>(rep));
        const PreparedData data = prepare_data(config, rep_rng);
        const StumpClassMeta meta = meta_for(config, data.train.dim());
        const std::vector<double> gammas = effective_gammas(config, meta);
        const TrainingTrace trace = train_trace(config, data, rep_rng);

        if (rep == 0) {
            report.columns = {"round", "train_error",
                              data.target ? "exact_error" : "test_error"};
            for (double g : gammas)
                report.columns.push_back("gamma_bound_" + format_number(g));
            if (config.bound_delta || config.bound_weighted || config.bound_normalized) {
                report.columns.push_back("delta_hat");
                report.columns.push_back("delta_dim");
            }
            if (config.bound_delta) report.columns.push_back("delta_bound");
            if (config.bound_weighted) report.columns.push_back("weighted_bound");
            if (config.bound_normalized) report.columns.push_back("normalized_bound");
            if (config.bound_vc) report.columns.push_back("vc_bound");
        }

        const std::vector<int> rounds = eval_rounds(config, trace.num_rounds());
        std::vector<std::vector<double>> rows(rounds.size());

        const auto m = static_cast<std::ptrdiff_t>(rounds.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t ri = 0; ri < m; ++ri) {
            const int t = rounds[ri];
            const ConvexCombination comb = trace.combination_at(t);
            const Evaluation train_eval = evaluate(comb, data.train);
            const MarginProfile profile =
                MarginProfile::from_margins(train_eval.margins);

            std::vector<double> row;
            row.push_back(t);
            row.push_back(train_eval.zero_one_error);
            if (data.target)
                row.push_back(exact_oracle_1d(comb, *data.target, 0.0));
            else
                row.push_back(evaluate(comb, data.test).zero_one_error);

            for (double g : gammas) row.push_back(gamma_bound(profile, g));

            const bool need_dim = config.bound_delta || config.bound_weighted ||
                                  config.bound_normalized;
            if (need_dim) {
                const WeightSpectrum spectrum = WeightSpectrum::from_combination(comb);
                DeltaBoundParams params;
                params.alpha = meta.alpha;
                params.n = data.train.size();
                params.t = config.t_param;
                params.zeta = config.zeta;
                params.k_scale = config.k_scale;
                params.ensemble_size = static_cast<std::size_t>(t);
                const DeltaHat dh = delta_hat(profile, spectrum, params);
                row.push_back(dh.delta_hat);
                if (dh.feasible) {
                    const EpsDetail detail = eps_n_detail(spectrum, dh.delta_hat, params);
                    row.push_back(detail.dim);
                    if (config.bound_delta) row.push_back(detail.value);
                    if (config.bound_weighted)
                        row.push_back(weighted_eps(spectrum, dh.delta_hat, params));
                    if (config.bound_normalized)
                        row.push_back(normalized_eps(spectrum, dh.delta_hat, params));
                } else {
                    row.push_back(static_cast<double>(spectrum.size()));
                    if (config.bound_delta) row.push_back(kInf);
                    if (config.bound_weighted) row.push_back(kInf);
                    if (config.bound_normalized) row.push_back(kInf);
                }
            }
            if (config.bound_vc)
                row.push_back(vc_psi_bound(
                    profile, BoundParams::for_gamma(data.train.size(), 1.0,
                                                    config.t_param)));
            rows[ri] = std::move(row);
        }

        if (rep == 0) {
            sum_rows = std::move(rows);
        } else {
            // Early stopping can shorten a repetition; average the common prefix.
            if (rows.size() < sum_rows.size()) sum_rows.resize(rows.size());
            for (std::size_t i = 0; i < sum_rows.size(); ++i)
                for (std::size_t jx = 0; jx < sum_rows[i].size(); ++jx)
                    sum_rows[i][jx] += rows[i][jx];
        }
    }

    for (auto& row : sum_rows)
        for (auto& v : row) v /= config.repetitions;
    report.rows = std::move(sum_rows);
    return report;
}

BoundReport ratio_experiment(const ExperimentConfig& config) {
    config.validate();
    if (config.dataset != "intervals")
        throw ConfigError("the ratio experiment requires the intervals dataset");

    BoundReport report;
    std::vector<std::vector<double>> sum_rows;
    const StumpClassMeta meta = StumpClassMeta::for_dim(1);
    const std::vector<double> gammas = effective_gammas(config, meta);

    for (int rep = 0; rep < config.repetitions; ++rep) {
        const Rng rep_rng = Rng(config.seed).child("rep", static_cast<std::uint64_t>(rep));
        const PreparedData data = prepare_data(config, rep_rng);
        const TrainingTrace trace = train_trace(config, data, rep_rng);

        if (rep == 0) {
            report.columns = {"round"};
            for (double g : gammas)
                report.columns.push_back("ratio_" + format_number(g));
        }

        const std::vector<int> rounds = eval_rounds(config, trace.num_rounds());
        std::vector<std::vector<double>> rows(rounds.size());
        const auto m = static_cast<std::ptrdiff_t>(rounds.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t ri = 0; ri < m; ++ri) {
            const int t = rounds[ri];
            const ConvexCombination comb = trace.combination_at(t);
            const MarginProfile profile =
                MarginProfile::from_margins(evaluate(comb, data.train).margins);
            const StepCdf true_cdf =
                cdf_from_segments(exact_margin_segments(comb, *data.target));

            std::vector<double> row{static_cast<double>(t)};
            for (double g : gammas) {
                const GammaMargin empirical = gamma_margin(profile, g);
                const GammaMargin truth =
                    gamma_margin_cdf(true_cdf, g, data.train.size());
                row.push_back(truth.delta_hat > 0.0
                                  ? empirical.delta_hat / truth.delta_hat
                                  : kInf);
            }
            rows[ri] = std::move(row);
        }

        if (rep == 0) {
            sum_rows = std::move(rows);
        } else {
            if (rows.size() < sum_rows.size()) sum_rows.resize(rows.size());
            for (std::size_t i = 0; i < sum_rows.size(); ++i)
                for (std::size_t jx = 0; jx < sum_rows[i].size(); ++jx)
                    sum_rows[i][jx] += rows[i][jx];
        }
    }
    for (auto& row : sum_rows)
        for (auto& v : row) v /= config.repetitions;
    report.rows = std::move(sum_rows);
    return report;
}

namespace {

void write_coeffs(const WeightSpectrum& spectrum, const std::string& path) {
    CsvWriter w(path);
    w.write_row({"rank", "weight"});
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        w.write_row({std::to_string(i + 1), format_number(spectrum.weights()[i])});
}

void write_margin_cdf(const MarginProfile& profile, const std::string& path) {
    const StepCdf cdf = StepCdf::from_profile(profile);
    CsvWriter w(path);
    w.write_row({"margin", "cdf"});
    for (std::size_t i = 0; i < cdf.values.size(); ++i)
        w.write_row({format_number(cdf.values[i]), format_number(cdf.cum[i])});
}

}  // namespace

DoomFileSummary run_doomlp_files(const DoomFileOptions& options) {
    const ConvexCombination before = ConvexCombination::load(options.model_path);
    const LabeledDataset ds = load_csv(options.data_path, -1,
                                       options.positive_label, options.csv_header);

    std::vector<Stump> stumps;
    std::vector<double> w0;
    for (const auto& term : before.terms()) {
        if (term.weight < -1e-12)
            throw ConfigError("doom-lp requires nonnegative model weights");
        stumps.push_back(term.stump);
        w0.push_back(std::max(term.weight, 0.0));
    }

    const Evaluation eval_before = evaluate(before, ds);
    const MarginProfile profile_before =
        MarginProfile::from_margins(eval_before.margins);

    double delta = options.delta;
    if (delta <= 0.0) {
        // Mirror the bound's infimum over delta on a coarse grid.
        const Rng rng(options.seed);
        const RademacherEstimate rad =
            rademacher_complexity(ds, options.rademacher_draws, rng.child("rademacher"));
        std::vector<double> grid;
        for (int j = 1; j <= 50; ++j) grid.push_back(0.02 * j);
        delta = rademacher_margin_bound(profile_before, rad.estimate,
                                        options.t_param, grid)
                    .best_delta;
    }

    const DoomResult result = doom_lp(w0, ds, stumps, delta);

    std::vector<WeightedStump> after_terms;
    for (std::size_t k = 0; k < stumps.size(); ++k)
        after_terms.push_back({result.weights[k], stumps[k]});
    const ConvexCombination after = ConvexCombination::normalized(std::move(after_terms));
    const Evaluation eval_after = evaluate(after, ds);
    const MarginProfile profile_after =
        MarginProfile::from_margins(eval_after.margins);

    const WeightSpectrum spec_before = WeightSpectrum::from_combination(before);
    const WeightSpectrum spec_after = WeightSpectrum::from_combination(after);

    namespace fs = std::filesystem;
    fs::create_directories(options.output_dir);
    const auto out = [&](const std::string& name) {
        return (fs::path(options.output_dir) / name).string();
    };

    after.save(out("model_after.csv"));
    {
        CsvWriter w(out("iterations.csv"));
        w.write_row({"iteration", "objective", "s_minus", "s_active", "s_clear",
                     "margin_cost"});
        for (const auto& it : result.trace)
            w.write_row({std::to_string(it.iteration), format_number(it.objective),
                         std::to_string(it.s_minus), std::to_string(it.s_active),
                         std::to_string(it.s_clear), format_number(it.cost)});
    }
    write_coeffs(spec_before, out("coeffs_before.csv"));
    write_coeffs(spec_after, out("coeffs_after.csv"));
    {
        CsvWriter w(out("delta_dims.csv"));
        w.write_row({"Delta", "dim_before", "dim_after"});
        for (int j = 0; j <= 50; ++j) {
            const double Delta = 0.02 * j;
            w.write_row({format_number(Delta),
                         std::to_string(delta_dimension(spec_before, Delta)),
                         std::to_string(delta_dimension(spec_after, Delta))});
        }
    }
    write_margin_cdf(profile_before, out("margin_cdf_before.csv"));
    write_margin_cdf(profile_after, out("margin_cdf_after.csv"));

    DoomFileSummary summary;
    summary.delta = delta;
    summary.cost_before = margin_cost(profile_before, delta);
    summary.cost_after = margin_cost(profile_after, delta);
    summary.objective_first = result.trace.front().objective;
    summary.objective_last = result.trace.back().objective;
    summary.support_before = static_cast<int>(spec_before.size());
    summary.support_after = static_cast<int>(spec_after.size());
    summary.dim001_before = delta_dimension(spec_before, 0.01);
    summary.dim001_after = delta_dimension(spec_after, 0.01);
    switch (result.status) {
        case DoomStatus::Converged: summary.status = "converged"; break;
        case DoomStatus::EmptyActiveSet: summary.status = "empty-active-set"; break;
        case DoomStatus::IterationCap: summary.status = "iteration-cap"; break;
    }
    {
        CsvWriter w(out("summary.csv"));
        w.write_row({"delta", "cost_before", "cost_after", "objective_first",
                     "objective_last", "support_before", "support_after",
                     "dim001_before", "dim001_after", "status"});
        w.write_row({format_number(summary.delta), format_number(summary.cost_before),
                     format_number(summary.cost_after),
                     format_number(summary.objective_first),
                     format_number(summary.objective_last),
                     std::to_string(summary.support_before),
                     std::to_string(summary.support_after),
                     std::to_string(summary.dim001_before),
                     std::to_string(summary.dim001_after), summary.status});
    }
    return summary;
}

}  // namespace stumpbounds
