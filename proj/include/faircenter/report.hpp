#pragma once

#include <optional>
#include <string>
#include <vector>

#include "faircenter/dataset.hpp"
#include "faircenter/pipeline.hpp"

namespace faircenter {

enum class Algorithm { Fair, Greedy };

/// One experiment: dataset, parameters, and output destinations. Exactly one
/// of (alpha and beta vectors) or delta must be provided.
struct RunConfig {
    std::string input;
    ColumnSpec columns;
    int k = 2;
    double epsilon = 0.1;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::optional<double> delta;
    Algorithm algorithm = Algorithm::Fair;
    std::uint64_t seed = 1;
    int repeats = 1;
    std::string output;        // JSON report path; empty = stdout summary only
    bool trace = false;        // include the radius-search trace in the report
    double tle_seconds = 1800.0;  // wall-clock budget; <= 0 disables it
};

/// Everything a run produces. status is "ok", "n/a" (the fairness bounds
/// admit no assignment at any radius), or "tle" (budget exhausted). The
/// radius search runs once; each repeat re-rounds it with seed + repeat
/// index, and the violation statistics aggregate over repeats. Reports with
/// equal config and seed are identical except runtime_seconds.
struct RunReport {
    std::string status;
    std::string algorithm;
    std::string input;
    int n = 0;
    int dim = 0;
    int k = 0;
    int num_groups = 0;
    double epsilon = 0.0;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::optional<double> delta;
    std::uint64_t seed = 0;
    int repeats = 0;
    double tle_seconds = 0.0;

    double cost = 0.0;                        // final radius; meaningful iff ok
    std::vector<double> eps_per_repeat;
    double eps_median = 0.0;
    double eps_max = 0.0;
    double runtime_seconds = 0.0;
    std::vector<int> centers;                 // chosen facility indices
    std::vector<int> cluster_sizes;
    std::vector<std::vector<int>> composition;  // cluster x group counts
    std::vector<std::string> group_names;
    std::vector<int> assignment;              // first repeat's rounding
    bool has_trace = false;
    SearchTrace trace;
    std::string message;                      // error detail for n/a and tle
};

/// Load config.input per config.columns, run, and write the JSON report to
/// config.output when set.
RunReport run(const RunConfig& config);

/// Same, on an already-loaded dataset (config.input is only echoed).
RunReport run_on(const Dataset& data, const RunConfig& config);

/// Versioned JSON rendering of a report (schema_version field first).
std::string report_to_json(const RunReport& report, int indent = 2);
void write_report(const RunReport& report, const std::string& path);

/// Tidy long-format CSV over a parameter sweep: header "<sweep_name>,metric,
/// value", three rows per report (cost, eps_median, runtime_seconds).
/// The reports must all describe the same dataset.
void emit_plot_data(const std::vector<RunReport>& reports, const std::string& sweep_name,
                    const std::vector<double>& sweep_values, std::ostream& out);

}  // namespace faircenter
