#include "faircenter/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace faircenter {

namespace {

constexpr int kSchemaVersion = 1;

FairnessParams resolve_params(const RunConfig& config, const GroupModel& model) {
    const bool has_vectors = !config.alpha.empty() || !config.beta.empty();
    if (has_vectors == config.delta.has_value())
        throw InputError("config must set exactly one of (alpha and beta) or delta");
    if (config.delta) return params_from_delta(model, *config.delta);
    if (config.alpha.size() != config.beta.size())
        throw InputError("alpha and beta must have the same length");
    if (static_cast<int>(config.alpha.size()) != model.num_groups())
        throw InputError("alpha/beta cover " + std::to_string(config.alpha.size()) +
                         " groups, dataset has " + std::to_string(model.num_groups()));
    Eigen::VectorXd a(model.num_groups()), b(model.num_groups());
    for (int g = 0; g < model.num_groups(); ++g) {
        a[g] = config.alpha[g];
        b[g] = config.beta[g];
    }
    return FairnessParams(std::move(a), std::move(b));
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

void fill_violation_stats(RunReport& report, const std::vector<double>& eps) {
    report.eps_per_repeat = eps;
    report.eps_median = median(eps);
    report.eps_max = *std::max_element(eps.begin(), eps.end());
}

void fill_composition(RunReport& report, const ViolationReport& audit_report) {
    const int k = static_cast<int>(audit_report.cluster_sizes.size());
    const int l = static_cast<int>(audit_report.cluster_group_counts.cols());
    report.cluster_sizes.assign(k, 0);
    report.composition.assign(k, std::vector<int>(l, 0));
    for (int f = 0; f < k; ++f) {
        report.cluster_sizes[f] = audit_report.cluster_sizes[f];
        for (int g = 0; g < l; ++g)
            report.composition[f][g] = audit_report.cluster_group_counts(f, g);
    }
}

}  // namespace

RunReport run_on(const Dataset& data, const RunConfig& config) {
    if (config.k < 1) throw InputError("k must be at least 1");
    if (config.repeats < 1) throw InputError("repeats must be at least 1");
    if (config.epsilon <= 0.0) throw InputError("epsilon must be positive");

    const FairnessParams params = resolve_params(config, data.model);

    RunReport report;
    report.status = "ok";
    report.algorithm = config.algorithm == Algorithm::Fair ? "fair" : "greedy";
    report.input = config.input;
    report.n = data.points.count();
    report.dim = data.points.dim();
    report.k = config.k;
    report.num_groups = data.model.num_groups();
    report.epsilon = config.epsilon;
    report.alpha.assign(params.alpha.data(), params.alpha.data() + params.alpha.size());
    report.beta.assign(params.beta.data(), params.beta.data() + params.beta.size());
    report.delta = config.delta;
    report.seed = config.seed;
    report.repeats = config.repeats;
    report.tle_seconds = config.tle_seconds;
    report.group_names = data.group_names;

    const auto start = std::chrono::steady_clock::now();
    const auto stop_clock = [&] {
        report.runtime_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    if (config.algorithm == Algorithm::Greedy) {
        const CenterSet centers = greedy_k_center(data.points, data.points, config.k);
        const std::vector<int> assignment = assign_nearest(data.points, centers);
        const ViolationReport audit_report =
            audit(assignment, centers.size(), data.model, params);
        report.cost = centers.radius;
        report.centers = centers.indices;
        report.assignment = assignment;
        fill_composition(report, audit_report);
        // Nearest assignment has no randomness; every repeat is the same run.
        fill_violation_stats(report,
                             std::vector<double>(config.repeats, audit_report.epsilon));
        stop_clock();
    } else {
        SearchLimits limits;
        limits.max_seconds = config.tle_seconds;
        try {
            const FairClusterResult result =
                fair_k_cluster(data.points, data.points, config.k, params, data.model,
                               config.epsilon, config.seed, limits);
            report.cost = result.final_lambda;
            report.centers = result.centers.indices;
            report.has_trace = config.trace;
            report.trace = result.trace;

            const RoundingPlan plan = make_rounding_plan(
                result.final_lp, result.clustering.lp_solution, result.final_table);
            std::vector<double> eps;
            for (int rep = 0; rep < config.repeats; ++rep) {
                const std::vector<int> assignment =
                    randomized_assign(plan, report.n, config.seed + rep);
                const ViolationReport audit_report =
                    audit(assignment, config.k, data.model, params);
                eps.push_back(audit_report.epsilon);
                if (rep == 0) {
                    report.assignment = assignment;
                    fill_composition(report, audit_report);
                }
            }
            fill_violation_stats(report, eps);
            stop_clock();
        } catch (const InfeasibleFairnessError& e) {
            report.status = "n/a";
            report.message = e.what();
            stop_clock();
        } catch (const TimeLimitExceeded& e) {
            report.status = "tle";
            report.message = e.what();
            report.has_trace = config.trace;
            report.trace = e.partial_trace;
            stop_clock();
        }
    }

    if (!config.output.empty()) write_report(report, config.output);
    return report;
}

RunReport run(const RunConfig& config) {
    const Dataset data = load_dataset(config.input, config.columns);
    return run_on(data, config);
}

std::string report_to_json(const RunReport& report, int indent) {
    using json = nlohmann::ordered_json;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["status"] = report.status;
    j["algorithm"] = report.algorithm;
    j["input"] = report.input;
    j["n"] = report.n;
    j["dim"] = report.dim;
    j["k"] = report.k;
    j["num_groups"] = report.num_groups;
    j["group_names"] = report.group_names;
    j["epsilon"] = report.epsilon;
    j["alpha"] = report.alpha;
    j["beta"] = report.beta;
    if (report.delta) j["delta"] = *report.delta;
    else j["delta"] = nullptr;
    j["seed"] = report.seed;
    j["repeats"] = report.repeats;
    j["tle_seconds"] = report.tle_seconds;

    if (report.status == "ok") {
        j["cost"] = report.cost;
        j["epsilon_violation"] = {{"median", report.eps_median},
                                  {"max", report.eps_max},
                                  {"per_repeat", report.eps_per_repeat}};
        j["centers"] = report.centers;
        j["cluster_sizes"] = report.cluster_sizes;
        j["composition"] = report.composition;
        j["assignment"] = report.assignment;
    } else {
        j["cost"] = nullptr;
        j["epsilon_violation"] = nullptr;
        j["message"] = report.message;
    }

    if (report.has_trace) {
        json records = json::array();
        for (const SearchRecord& rec : report.trace.records) {
            records.push_back({{"lo", rec.lo},
                               {"hi", rec.hi},
                               {"lambda", rec.lambda},
                               {"reachable", rec.reachable},
                               {"feasible", rec.feasible}});
        }
        j["trace"] = {{"initial_hi", report.trace.initial_hi},
                      {"final_lambda", report.trace.final_lambda},
                      {"iterations", report.trace.iterations()},
                      {"records", records}};
    }

    j["runtime_seconds"] = report.runtime_seconds;
    return j.dump(indent);
}

void write_report(const RunReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << report_to_json(report) << '\n';
    if (!out.good()) throw InputError("failed while writing '" + path + "'");
}

void emit_plot_data(const std::vector<RunReport>& reports, const std::string& sweep_name,
                    const std::vector<double>& sweep_values, std::ostream& out) {
    if (reports.empty()) throw InputError("emit_plot_data: no reports");
    if (reports.size() != sweep_values.size())
        throw InputError("emit_plot_data: one sweep value per report required");
    for (const RunReport& r : reports) {
        if (r.input != reports.front().input || r.n != reports.front().n ||
            r.dim != reports.front().dim)
            throw InputError("emit_plot_data: reports mix different datasets");
    }

    const auto fmt = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    out << sweep_name << ",metric,value\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const RunReport& r = reports[i];
        const std::string sweep = fmt(sweep_values[i]);
        const bool ok = r.status == "ok";
        out << sweep << ",cost," << (ok ? fmt(r.cost) : "nan") << '\n';
        out << sweep << ",eps_median," << (ok ? fmt(r.eps_median) : "nan") << '\n';
        out << sweep << ",runtime_seconds," << fmt(r.runtime_seconds) << '\n';
    }
}

}  // namespace faircenter
