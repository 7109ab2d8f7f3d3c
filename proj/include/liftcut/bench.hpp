#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "liftcut/presets.hpp"
#include "liftcut/run_record.hpp"
#include "liftcut/solver.hpp"

namespace liftcut {

/// Sweep token meaning "lift dimension = the graph's node count".
inline constexpr int kLiftFullDim = -1;

struct BenchOptions {
    std::vector<std::string> graph_paths;
    std::vector<Algorithm> algorithms = {Algorithm::pQUCO};
    std::vector<std::uint64_t> seeds = {0};
    SolverConfig base;                    // shared knobs: batch size, init, batches
    bool auto_params = false;             // true: evolutionary search, false: manual
    std::optional<PresetFamily> preset;   // manual (alpha, T) preset
    std::vector<int> sweep_lift;          // lift dims for lifted algorithms; kLiftFullDim = n
    std::optional<double> time_budget_s;  // per run
    unsigned workers = 1;                 // threads inside one solve
    unsigned jobs = 1;                    // concurrent runs; > 1 disables timing aggregation
    std::string out_dir;                  // record output directory; empty = don't write
};

struct AggregateRow {
    std::string algorithm;  // label; lifted sweeps append "-l<k>"
    std::string init;
    double mean_cut = 0.0;
    double mean_time_s = 0.0;
    std::int64_t n_runs = 0;
    double min_cut = 0.0;
    double max_cut = 0.0;
    double std_cut = 0.0;
};

struct RunFailure {
    std::string graph_id;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::string message;
};

struct BenchResult {
    std::vector<RunRecord> records;
    std::vector<AggregateRow> aggregate;
    std::vector<RunFailure> failures;
};

/// Runs every (graph, algorithm variant, seed) combination, persisting one
/// record per run when out_dir is set. Individual failures are collected and
/// the harness continues.
BenchResult run_bench(const BenchOptions& options);

/// Exactly: algorithm,init,mean_cut,mean_time_s,n_runs.
std::string aggregate_csv(std::span<const AggregateRow> rows);

/// Aggregate rows with spread statistics plus any failures.
nlohmann::json bench_summary_json(const BenchResult& result);

} // namespace liftcut
