#include "liftcut/bench.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "liftcut/errors.hpp"
#include "liftcut/parallel.hpp"

namespace liftcut {

namespace {

struct Variant {
    std::string label;
    SolverConfig cfg;
    int lift_override = 0;  // 0: as configured; kLiftFullDim: graph node count
};

struct RunSpec {
    std::size_t graph_index = 0;
    std::size_t variant_index = 0;
    std::uint64_t seed = 0;
};

std::string path_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::vector<Variant> expand_variants(const BenchOptions& options) {
    std::vector<Variant> variants;
    for (Algorithm algo : options.algorithms) {
        SolverConfig cfg = options.base;
        cfg.algorithm = algo;
        cfg.time_budget_s = options.time_budget_s ? options.time_budget_s : cfg.time_budget_s;
        if (options.auto_params) {
            cfg.search = auto_search_bounds();
        } else {
            cfg.search.reset();
            if (options.preset) apply_manual_preset(cfg, *options.preset);
        }
        const bool lifted = algo != Algorithm::pQUCO;
        if (lifted && !options.sweep_lift.empty()) {
            for (int l : options.sweep_lift) {
                if (l != kLiftFullDim && l < 2)
                    throw ValidationError("bench: swept lift dims must be >= 2");
                const std::string tag = l == kLiftFullDim ? "n" : std::to_string(l);
                Variant v{std::string(to_string(algo)) + "-l" + tag, cfg, l};
                if (l != kLiftFullDim) {
                    v.cfg.lift_dim = l;
                    v.cfg.validate();
                }
                variants.push_back(std::move(v));
            }
        } else {
            cfg.validate();
            variants.push_back({to_string(algo), std::move(cfg), 0});
        }
    }
    return variants;
}

double population_std(std::span<const double> values, double mean) {
    if (values.empty()) return 0.0;
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return std::sqrt(acc / static_cast<double>(values.size()));
}

} // namespace

BenchResult run_bench(const BenchOptions& options) {
    if (options.graph_paths.empty()) throw ValidationError("bench: no graph files given");
    if (options.algorithms.empty()) throw ValidationError("bench: no algorithms given");
    if (options.seeds.empty()) throw ValidationError("bench: no seeds given");
    if (options.jobs < 1) throw ValidationError("bench: jobs must be >= 1");

    BenchResult result;
    std::vector<std::optional<Graph>> graphs(options.graph_paths.size());
    for (std::size_t gi = 0; gi < options.graph_paths.size(); ++gi) {
        try {
            graphs[gi] = load_graph_file(options.graph_paths[gi]);
        } catch (const std::exception& e) {
            result.failures.push_back(
                {path_stem(options.graph_paths[gi]), "load", 0, e.what()});
        }
    }

    const std::vector<Variant> variants = expand_variants(options);
    if (!options.out_dir.empty()) std::filesystem::create_directories(options.out_dir);

    std::vector<RunSpec> runs;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        if (!graphs[gi]) continue;
        for (std::size_t vi = 0; vi < variants.size(); ++vi)
            for (std::uint64_t seed : options.seeds) runs.push_back({gi, vi, seed});
    }

    std::vector<std::optional<RunRecord>> slots(runs.size());
    std::vector<std::optional<RunFailure>> failures(runs.size());
    parallel_for(0, runs.size(), options.jobs, [&](std::size_t i) {
        const RunSpec& spec = runs[i];
        const Variant& variant = variants[spec.variant_index];
        const std::string& path = options.graph_paths[spec.graph_index];
        const std::string graph_id = path_stem(path);
        const Graph& graph = *graphs[spec.graph_index];
        try {
            SolverConfig cfg = variant.cfg;
            if (variant.lift_override == kLiftFullDim) {
                cfg.lift_dim = static_cast<int>(graph.node_count());
                cfg.validate();
            }
            const SolveOutcome outcome =
                solve_per_component(graph, cfg, spec.seed, options.workers);
            RunRecord record = make_record(graph_id, path, graph, cfg, spec.seed, outcome);
            if (!verify_record(graph, record))
                throw Error("record failed self-verification");
            if (!options.out_dir.empty()) {
                const std::string file = graph_id + "__" + variant.label + "__s" +
                                         std::to_string(spec.seed) + ".json";
                write_record_file((std::filesystem::path(options.out_dir) / file).string(), record);
            }
            slots[i] = std::move(record);
        } catch (const std::exception& e) {
            failures[i] = RunFailure{graph_id, variant.label, spec.seed, e.what()};
        }
    });

    // Aggregate per (algorithm label, init): order of first appearance.
    std::vector<std::pair<std::string, std::string>> keys;
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (failures[i]) {
            result.failures.push_back(std::move(*failures[i]));
            continue;
        }
        const Variant& variant = variants[runs[i].variant_index];
        const std::pair<std::string, std::string> key{variant.label,
                                                      to_string(variant.cfg.init.method)};
        if (groups.find(key) == groups.end()) keys.push_back(key);
        groups[key].push_back(result.records.size());
        result.records.push_back(std::move(*slots[i]));
    }

    const bool timing_valid = options.jobs == 1;
    for (const auto& key : keys) {
        const std::vector<std::size_t>& members = groups[key];
        AggregateRow row;
        row.algorithm = key.first;
        row.init = key.second;
        row.n_runs = static_cast<std::int64_t>(members.size());
        std::vector<double> cuts;
        cuts.reserve(members.size());
        double time_acc = 0.0;
        for (std::size_t idx : members) {
            cuts.push_back(static_cast<double>(result.records[idx].best_cut));
            time_acc += result.records[idx].wall_time_s;
        }
        const double n = static_cast<double>(members.size());
        row.mean_cut = std::accumulate(cuts.begin(), cuts.end(), 0.0) / n;
        row.mean_time_s =
            timing_valid ? time_acc / n : std::numeric_limits<double>::quiet_NaN();
        row.min_cut = *std::min_element(cuts.begin(), cuts.end());
        row.max_cut = *std::max_element(cuts.begin(), cuts.end());
        row.std_cut = population_std(cuts, row.mean_cut);
        result.aggregate.push_back(std::move(row));
    }
    return result;
}

std::string aggregate_csv(std::span<const AggregateRow> rows) {
    std::ostringstream out;
    out << "algorithm,init,mean_cut,mean_time_s,n_runs\n";
    out << std::setprecision(10);
    for (const AggregateRow& row : rows)
        out << row.algorithm << ',' << row.init << ',' << row.mean_cut << ','
            << row.mean_time_s << ',' << row.n_runs << '\n';
    return out.str();
}

nlohmann::json bench_summary_json(const BenchResult& result) {
    nlohmann::json j;
    j["aggregate"] = nlohmann::json::array();
    for (const AggregateRow& row : result.aggregate)
        j["aggregate"].push_back({{"algorithm", row.algorithm},
                                  {"init", row.init},
                                  {"mean_cut", row.mean_cut},
                                  {"mean_time_s", row.mean_time_s},
                                  {"n_runs", row.n_runs},
                                  {"min_cut", row.min_cut},
                                  {"max_cut", row.max_cut},
                                  {"std_cut", row.std_cut}});
    j["failures"] = nlohmann::json::array();
    for (const RunFailure& f : result.failures)
        j["failures"].push_back({{"graph_id", f.graph_id},
                                 {"algorithm", f.algorithm},
                                 {"seed", f.seed},
                                 {"message", f.message}});
    j["n_records"] = result.records.size();
    return j;
}

} // namespace liftcut
