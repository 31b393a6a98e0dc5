#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "uavtraj/baselines.hpp"
#include "uavtraj/objective.hpp"
#include "uavtraj/scenario.hpp"

namespace uavtraj {

/// Grid of benchmark runs: scenarios x algorithms x seeds.
struct ExperimentSpec {
    std::vector<std::string> scenarios;  // builtin case tag or path to a scenario file
    std::vector<Algorithm> algorithms;
    std::vector<std::uint64_t> seeds;
    int population = 100;
    int iterations = 100;
    double penalty_weight = default_penalty_weight;
    std::filesystem::path output_dir;
    int workers = 1;
};

/// The benchmark protocol's default seed list: 1..30.
std::vector<std::uint64_t> default_seeds();

/// One row of runs.csv.
struct RunRecord {
    std::string scenario;
    std::string algorithm;
    std::uint64_t seed = 0;
    double best_cost = 0.0;
    std::int64_t evaluations = 0;
    double elapsed_seconds = 0.0;
    std::string params;  // resolved parameters as "key=value;..."
    bool failed = false;
    std::string error;
};

/// One row of summary.csv: statistics over the finished runs of a
/// (scenario, algorithm) pair.
struct SummaryRow {
    std::string scenario;
    std::string algorithm;
    double median_cost = 0.0;
    double mean_cost = 0.0;
    double std_cost = 0.0;
    double median_time = 0.0;
    int runs = 0;
};

struct ExperimentResult {
    std::vector<RunRecord> records;
    std::vector<SummaryRow> summary;
};

/// Executes the full grid and writes, under spec.output_dir:
///   scenarios/<name>.scn            resolved copy of each scenario
///   runs/<scn>__<algo>__s<k>.csv    per-iteration convergence + diversity
///   runs/<scn>__<algo>__s<k>_path.csv  best trajectory waypoints
///   runs.csv, summary.csv, report.txt, plots/...
/// Failed runs are recorded and skipped; scenario resolution failures throw.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Human-readable ranking report: per scenario, algorithms sorted by median
/// cost (ties by mean, then name), best row flagged.
std::string report_table(const std::vector<SummaryRow>& rows);

/// Recomputes summary rows from runs.csv in an output directory. Because the
/// CSVs round-trip doubles exactly, this reproduces summary.csv bit-for-bit.
std::vector<SummaryRow> aggregate_runs(const std::filesystem::path& output_dir);

/// Parses a previously written summary.csv back.
std::vector<SummaryRow> load_summary(const std::filesystem::path& output_dir);

/// Parses a previously written runs.csv back.
std::vector<RunRecord> load_runs(const std::filesystem::path& output_dir);

/// Rebuilds plot-friendly artifacts from the per-run files:
///   plots/<scn>__<algo>_curve.csv   per-iteration median best cost over seeds
///   plots/<scn>_overlay.txt         obstacles and each algorithm's best path
/// Throws std::runtime_error naming any missing input file.
void emit_plot_data(const std::filesystem::path& output_dir);

}  // namespace uavtraj
