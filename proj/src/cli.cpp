#include "stumpbounds/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "stumpbounds/csv.hpp"
#include "stumpbounds/dataset.hpp"
#include "stumpbounds/ensemble.hpp"
#include "stumpbounds/errors.hpp"
#include "stumpbounds/experiment.hpp"
#include "stumpbounds/svg.hpp"

namespace stumpbounds {

namespace {

namespace fs = std::filesystem;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open file for writing: " + path);
    out << text;
}

void write_report_svg(const BoundReport& report, const std::string& title,
                      const std::string& path) {
    std::vector<double> x;
    for (const auto& row : report.rows) x.push_back(row.front());
    std::vector<std::string> names(report.columns.begin() + 1, report.columns.end());
    std::vector<std::vector<double>> series(names.size());
    for (std::size_t s = 0; s < names.size(); ++s)
        for (const auto& row : report.rows) series[s].push_back(row[s + 1]);
    write_text(path, render_line_chart(title, report.columns.front(), x, names, series));
}

struct GenArgs {
    std::string dataset = "intervals";
    int intervals = 20;
    std::size_t n = 1000;
    std::size_t dim = 20;
    std::uint64_t seed = 1;
    bool header = false;
    std::string out = "data.csv";
    std::string concept_out;
};

void cmd_gen(const GenArgs& args) {
    Rng rng = Rng(args.seed).child("gen");
    if (args.dataset == "intervals") {
        auto [ds, target_concept] = gen_intervals(args.intervals, args.n, rng);
        save_csv(ds, args.out, args.header);
        if (!args.concept_out.empty()) {
            CsvWriter w(args.concept_out);
            w.write_row({"lo", "hi"});
            for (const auto& iv : target_concept.intervals())
                w.write_row({format_number(iv.lo), format_number(iv.hi)});
        }
    } else if (args.dataset == "twonorm") {
        save_csv(gen_twonorm(args.n, args.dim, rng), args.out, args.header);
    } else {
        throw ConfigError("gen supports datasets: intervals, twonorm");
    }
    std::cout << "wrote " << args.out << "\n";
}

struct RunArgs {
    std::string config_path;
    std::string output_dir_override;
};

void cmd_run(const RunArgs& args, bool ratio) {
    ExperimentConfig config = ExperimentConfig::from_json_file(args.config_path);
    if (!args.output_dir_override.empty()) config.output_dir = args.output_dir_override;
    fs::create_directories(config.output_dir);
    const auto out = [&](const std::string& name) {
        return (fs::path(config.output_dir) / name).string();
    };

    if (ratio) {
        const BoundReport report = ratio_experiment(config);
        write_report_csv(report, out("ratio.csv"));
        write_report_svg(report, "gamma-margin ratio", out("ratio.svg"));
        std::cout << "wrote " << out("ratio.csv") << "\n";
        return;
    }

    const BoundReport report = run_experiment(config);
    write_report_csv(report, out("report.csv"));
    write_report_svg(report, "errors and bounds", out("report.svg"));

    if (config.repetitions == 1) {
        // Single-repetition runs also serialize the trace and final model so
        // every bound column can be recomputed offline.
        const Rng rep_rng = Rng(config.seed).child("rep", 0);
        const PreparedData data = prepare_data(config, rep_rng);
        const TrainingTrace trace =
            config.algorithm == "adaboost"
                ? adaboost(data.train, config.rounds)
                : bagging(data.train, config.rounds, rep_rng.child("bagging"));
        trace.save(out("trace.csv"), out("stumps.csv"));
        trace.final_combination().save(out("model.csv"));
    }
    std::cout << "wrote " << out("report.csv") << "\n";
}

struct RadArgs {
    std::string dataset = "twonorm";
    std::string csv_path;
    std::string positive_label = "1";
    bool header = false;
    int intervals = 20;
    std::size_t n = 1000;
    std::size_t dim = 20;
    int draws = 200;
    std::uint64_t seed = 1;
    std::string out;
};

void cmd_rademacher(const RadArgs& args) {
    const Rng rng(args.seed);
    LabeledDataset ds;
    if (args.dataset == "intervals") {
        Rng gen_rng = rng.child("gen");
        ds = gen_intervals(args.intervals, args.n, gen_rng).first;
    } else if (args.dataset == "twonorm") {
        Rng gen_rng = rng.child("gen");
        ds = gen_twonorm(args.n, args.dim, gen_rng);
    } else if (args.dataset == "csv") {
        ds = load_csv(args.csv_path, -1, args.positive_label, args.header);
    } else {
        throw ConfigError("rademacher supports datasets: intervals, twonorm, csv");
    }
    const RademacherEstimate est =
        rademacher_complexity(ds, args.draws, rng.child("rademacher"));
    const std::string line = "estimate,std_error\n" + format_number(est.estimate) +
                             "," + format_number(est.std_error) + "\n";
    if (!args.out.empty()) write_text(args.out, line);
    std::cout << line;
}

struct PlotArgs {
    std::string csv_path;
    std::string x_col;
    std::vector<std::string> y_cols;
    std::string out = "chart.svg";
    std::string title = "chart";
};

void cmd_plot(const PlotArgs& args) {
    const BoundReport report = read_report_csv(args.csv_path);
    if (report.rows.empty()) throw DataError(args.csv_path + ": no data rows");
    const std::size_t xi = report.column_index(args.x_col);
    std::vector<double> x;
    for (const auto& row : report.rows) x.push_back(row[xi]);
    std::vector<std::vector<double>> series;
    for (const auto& name : args.y_cols) {
        const std::size_t ci = report.column_index(name);
        std::vector<double> s;
        for (const auto& row : report.rows) s.push_back(row[ci]);
        series.push_back(std::move(s));
    }
    write_text(args.out,
               render_line_chart(args.title, args.x_col, x, args.y_cols, series));
    std::cout << "wrote " << args.out << "\n";
}

void cmd_doomlp(const DoomFileOptions& options) {
    const DoomFileSummary s = run_doomlp_files(options);
    std::cout << "delta=" << format_number(s.delta)
              << " cost_before=" << format_number(s.cost_before)
              << " cost_after=" << format_number(s.cost_after)
              << " support=" << s.support_before << "->" << s.support_after
              << " dim(0.01)=" << s.dim001_before << "->" << s.dim001_after
              << " status=" << s.status << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"decision-stump ensembles with margin and dimension bounds"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a dataset CSV");
    gen->add_option("--dataset", gen_args.dataset, "intervals or twonorm");
    gen->add_option("--intervals", gen_args.intervals, "number of +1 intervals");
    gen->add_option("--n", gen_args.n, "sample size");
    gen->add_option("--dim", gen_args.dim, "twonorm dimension");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_flag("--header", gen_args.header, "write a header row");
    gen->add_option("--out", gen_args.out, "output CSV path");
    gen->add_option("--concept-out", gen_args.concept_out,
                    "write the intervals concept (lo,hi per line)");
    gen->callback([&] { cmd_gen(gen_args); });

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "train and evaluate bounds per round");
    run->add_option("--config", run_args.config_path, "experiment config JSON")
        ->required();
    run->add_option("--output-dir", run_args.output_dir_override,
                    "override the config's output directory");
    run->callback([&] { cmd_run(run_args, false); });

    RunArgs ratio_args;
    auto* ratio = app.add_subcommand(
        "ratio", "empirical/true gamma-margin ratios (intervals problem)");
    ratio->add_option("--config", ratio_args.config_path, "experiment config JSON")
        ->required();
    ratio->add_option("--output-dir", ratio_args.output_dir_override,
                      "override the config's output directory");
    ratio->callback([&] { cmd_run(ratio_args, true); });

    DoomFileOptions doom_options;
    auto* doom = app.add_subcommand("doomlp",
                                    "redistribute ensemble weights by DOOM-LP");
    doom->add_option("--model", doom_options.model_path, "combined-classifier CSV")
        ->required();
    doom->add_option("--data", doom_options.data_path, "dataset CSV (label last)")
        ->required();
    doom->add_flag("--header", doom_options.csv_header, "dataset has a header row");
    doom->add_option("--positive-label", doom_options.positive_label,
                     "label token mapped to +1");
    doom->add_option("--delta", doom_options.delta,
                     "margin scale; omit or <= 0 to pick by the margin bound");
    doom->add_option("--draws", doom_options.rademacher_draws,
                     "Rademacher draws for automatic delta");
    doom->add_option("--t", doom_options.t_param, "confidence parameter");
    doom->add_option("--seed", doom_options.seed, "random seed");
    doom->add_option("--out-dir", doom_options.output_dir, "output directory");
    doom->callback([&] { cmd_doomlp(doom_options); });

    RadArgs rad_args;
    auto* rad = app.add_subcommand("rademacher",
                                   "Monte-Carlo stump-class Rademacher complexity");
    rad->add_option("--dataset", rad_args.dataset, "intervals, twonorm, or csv");
    rad->add_option("--csv", rad_args.csv_path, "dataset CSV path");
    rad->add_option("--positive-label", rad_args.positive_label,
                    "label token mapped to +1");
    rad->add_flag("--header", rad_args.header, "dataset has a header row");
    rad->add_option("--intervals", rad_args.intervals, "number of +1 intervals");
    rad->add_option("--n", rad_args.n, "sample size");
    rad->add_option("--dim", rad_args.dim, "twonorm dimension");
    rad->add_option("--draws", rad_args.draws, "Monte-Carlo draws");
    rad->add_option("--seed", rad_args.seed, "random seed");
    rad->add_option("--out", rad_args.out, "optional output CSV");
    rad->callback([&] { cmd_rademacher(rad_args); });

    PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot", "render a CSV as an SVG line chart");
    plot->add_option("--csv", plot_args.csv_path, "input CSV")->required();
    plot->add_option("--x", plot_args.x_col, "x column name")->required();
    plot->add_option("--y", plot_args.y_cols, "y column names")
        ->required()
        ->delimiter(',');
    plot->add_option("--out", plot_args.out, "output SVG path");
    plot->add_option("--title", plot_args.title, "chart title");
    plot->callback([&] { cmd_plot(plot_args); });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace stumpbounds
