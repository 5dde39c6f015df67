#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "faircenter/dataset.hpp"
#include "faircenter/joiners.hpp"
#include "faircenter/report.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream stream(text);
    while (std::getline(stream, part, ',')) parts.push_back(part);
    return parts;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    for (const std::string& part : split_list(text)) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "'" + part + "' is not a number");
        }
    }
    return values;
}

struct CommonArgs {
    std::string input;
    std::string group_cols;
    std::string feature_cols;
    bool normalize = false;
    int k = 2;
    double epsilon = 0.1;
    std::string alpha, beta;
    double delta = -1.0;
    bool delta_set = false;
    std::string algorithm = "fair";
    std::uint64_t seed = 1;
    int repeats = 1;
    std::string output;
    bool trace = false;
    double tle_seconds = 1800.0;
};

void add_dataset_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--input", args.input, "CSV dataset with a header row")->required();
    cmd->add_option("--group-cols", args.group_cols,
                    "comma-separated protected-group columns (0/1 indicator or categorical)")
        ->required();
    cmd->add_option("--feature-cols", args.feature_cols,
                    "comma-separated feature columns (default: all non-group columns)");
    cmd->add_flag("--normalize", args.normalize, "min-max scale each feature to [0,1]");
}

void add_run_flags(CLI::App* cmd, CommonArgs& args) {
    add_dataset_flags(cmd, args);
    cmd->add_option("--k", args.k, "number of centers")->required();
    cmd->add_option("--epsilon", args.epsilon, "radius search precision (default 0.1)");
    cmd->add_option("--alpha", args.alpha, "comma-separated upper group shares");
    cmd->add_option("--beta", args.beta, "comma-separated lower group shares");
    cmd->add_option("--delta", args.delta,
                    "tightness knob: alpha=r/(1-delta), beta=r*(1-delta)")
        ->check(CLI::Range(0.0, 0.999999));
    cmd->add_option("--algorithm", args.algorithm, "fair | greedy (default fair)")
        ->check(CLI::IsMember({"fair", "greedy"}));
    cmd->add_option("--seed", args.seed, "PRNG seed (default 1)");
    cmd->add_option("--repeats", args.repeats, "rounding repetitions (default 1)");
    cmd->add_option("--output", args.output, "write the JSON report here");
    cmd->add_flag("--trace", args.trace, "include the radius-search trace in the report");
    cmd->add_option("--tle-seconds", args.tle_seconds,
                    "wall-clock budget in seconds (default 1800, <=0 disables)");
}

faircenter::RunConfig config_from(const CommonArgs& args, const CLI::App* cmd) {
    faircenter::RunConfig config;
    config.input = args.input;
    config.columns.group_columns = split_list(args.group_cols);
    if (!args.feature_cols.empty()) config.columns.feature_columns = split_list(args.feature_cols);
    config.columns.normalize = args.normalize;
    config.k = args.k;
    config.epsilon = args.epsilon;
    if (!args.alpha.empty()) config.alpha = parse_double_list(args.alpha, "--alpha");
    if (!args.beta.empty()) config.beta = parse_double_list(args.beta, "--beta");
    if (cmd->count("--delta") > 0) config.delta = args.delta;
    config.algorithm =
        args.algorithm == "greedy" ? faircenter::Algorithm::Greedy : faircenter::Algorithm::Fair;
    config.seed = args.seed;
    config.repeats = args.repeats;
    config.output = args.output;
    config.trace = args.trace;
    config.tle_seconds = args.tle_seconds;
    return config;
}

void print_summary(const faircenter::RunReport& report) {
    std::printf("status: %s\n", report.status.c_str());
    if (report.status == "ok") {
        std::printf("cost: %.6g\n", report.cost);
        std::printf("epsilon_violation median: %.6g (ceil %d), max: %.6g (ceil %d)\n",
                    report.eps_median, static_cast<int>(std::ceil(report.eps_median)),
                    report.eps_max, static_cast<int>(std::ceil(report.eps_max)));
        std::printf("centers:");
        for (int c : report.centers) std::printf(" %d", c);
        std::printf("\n");
    } else {
        std::printf("reason: %s\n", report.message.c_str());
    }
    std::printf("runtime_seconds: %.3f\n", report.runtime_seconds);
}

int cmd_run(const CommonArgs& args, const CLI::App* cmd) {
    const faircenter::RunConfig config = config_from(args, cmd);
    const faircenter::RunReport report = faircenter::run(config);
    print_summary(report);
    return 0;
}

int cmd_sweep(const CommonArgs& args, const CLI::App* cmd, const std::string& axis,
              const std::string& values_text, const std::string& plot_output) {
    const std::vector<double> values = parse_double_list(values_text, "--values");
    if (values.empty()) throw CLI::ValidationError("--values", "sweep needs at least one value");

    const faircenter::RunConfig base = config_from(args, cmd);
    const faircenter::Dataset data = faircenter::load_dataset(base.input, base.columns);

    std::vector<faircenter::RunReport> reports;
    for (double value : values) {
        faircenter::RunConfig config = base;
        config.output.clear();
        if (axis == "k") {
            const int k = static_cast<int>(value);
            if (k != value) throw CLI::ValidationError("--values", "k sweep needs integers");
            config.k = k;
        } else {
            config.alpha.clear();
            config.beta.clear();
            config.delta = value;
        }
        reports.push_back(faircenter::run_on(data, config));
        std::printf("%s=%g -> status %s, cost %.6g, median eps %.6g\n", axis.c_str(), value,
                    reports.back().status.c_str(), reports.back().cost,
                    reports.back().eps_median);
    }

    std::ofstream out(plot_output);
    if (!out) {
        std::fprintf(stderr, "cannot write '%s'\n", plot_output.c_str());
        return 1;
    }
    faircenter::emit_plot_data(reports, axis, values, out);
    std::printf("wrote %s\n", plot_output.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fair k-center clustering with per-cluster group-share bounds"};
    app.require_subcommand(1);

    CommonArgs run_args;
    CLI::App* run_cmd = app.add_subcommand("run", "cluster one dataset and report the result");
    add_run_flags(run_cmd, run_args);

    CommonArgs sweep_args;
    std::string sweep_axis = "k", sweep_values, sweep_plot = "sweep.csv";
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "repeat a run over k or delta and emit tidy plot data");
    add_run_flags(sweep_cmd, sweep_args);
    sweep_cmd->add_option("--sweep", sweep_axis, "axis: k | delta")
        ->check(CLI::IsMember({"k", "delta"}));
    sweep_cmd->add_option("--values", sweep_values, "comma-separated sweep values")->required();
    sweep_cmd->add_option("--plot-output", sweep_plot, "tidy CSV path (default sweep.csv)");

    faircenter::SyntheticSpec synth_spec;
    std::string synth_output;
    CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic blob dataset CSV");
    synth_cmd->add_option("--n", synth_spec.num_points, "number of points")->required();
    synth_cmd->add_option("--dim", synth_spec.dim, "dimensions (default 2)");
    synth_cmd->add_option("--blobs", synth_spec.num_blobs, "number of blobs (default 3)");
    synth_cmd->add_option("--groups", synth_spec.num_groups, "number of groups (default 2)");
    synth_cmd->add_option("--spread", synth_spec.spread, "within-blob stddev (default 1)");
    synth_cmd->add_option("--box", synth_spec.box, "blob-center box size (default 20)");
    synth_cmd->add_option("--mixing", synth_spec.group_mixing,
                          "chance a group ignores its blob (default 0.2)");
    synth_cmd->add_option("--overlap", synth_spec.overlap,
                          "chance of a second group (default 0)");
    synth_cmd->add_option("--seed", synth_spec.seed, "PRNG seed (default 1)");
    synth_cmd->add_option("--output", synth_output, "CSV path")->required();

    CommonArgs table_args;
    double table_lambda = -1.0;
    std::string table_output;
    CLI::App* table_cmd = app.add_subcommand(
        "table", "dump the (signature, joiner) frequency table at a fixed radius");
    add_dataset_flags(table_cmd, table_args);
    table_cmd->add_option("--k", table_args.k, "number of centers")->required();
    table_cmd->add_option("--lambda", table_lambda,
                          "radius; defaults to the greedy covering radius");
    table_cmd->add_option("--output", table_output, "CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(run_args, run_cmd);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_args, sweep_cmd, sweep_axis, sweep_values, sweep_plot);
        if (synth_cmd->parsed()) {
            faircenter::write_csv_file(faircenter::make_synthetic(synth_spec), synth_output);
            std::printf("wrote %s\n", synth_output.c_str());
            return 0;
        }
        if (table_cmd->parsed()) {
            faircenter::ColumnSpec columns;
            columns.group_columns = split_list(table_args.group_cols);
            if (!table_args.feature_cols.empty())
                columns.feature_columns = split_list(table_args.feature_cols);
            columns.normalize = table_args.normalize;
            const faircenter::Dataset data = faircenter::load_dataset(table_args.input, columns);
            const faircenter::CenterSet centers =
                faircenter::greedy_k_center(data.points, data.points, table_args.k);
            const faircenter::DistanceMatrix dmat(data.points, centers.as_point_set());
            const double lambda = table_lambda >= 0.0 ? table_lambda : centers.radius;
            const faircenter::FrequencyTable table =
                faircenter::build_frequency_table(data.model, dmat, lambda);
            if (table_output.empty()) {
                faircenter::dump_table_csv(table, data.model, std::cout);
            } else {
                std::ofstream out(table_output);
                if (!out) {
                    std::fprintf(stderr, "cannot write '%s'\n", table_output.c_str());
                    return 1;
                }
                faircenter::dump_table_csv(table, data.model, out);
                std::printf("wrote %s\n", table_output.c_str());
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
