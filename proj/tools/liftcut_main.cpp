#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liftcut/bench.hpp"
#include "liftcut/errors.hpp"
#include "liftcut/oracle.hpp"
#include "liftcut/presets.hpp"
#include "liftcut/run_record.hpp"
#include "liftcut/solver.hpp"

namespace {

namespace fs = std::filesystem;
using namespace liftcut;

std::string default_out_dir() {
    const char* env = std::getenv("LIFTCUT_OUT_DIR");
    return env && *env ? env : ".";
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ','))
        if (!token.empty()) parts.push_back(token);
    return parts;
}

struct SolveArgs {
    std::string graph;
    std::string algo = "pquco";
    std::string init = "idi";
    std::uint64_t seed = 0;
    std::int64_t batch = 64;
    std::int64_t batches = 3;
    int lift = 2;
    double alpha = 0.05;
    std::int64_t iters = 500;
    double momentum = 0.9;
    bool no_early_exit = false;
    double lifted_alpha = 0.0;
    std::int64_t lifted_iters = 0;
    double eta = 0.8;
    double beta = 0.2;
    double init_scale = 10000.0;
    bool raw_noise = false;
    bool fixed_init = false;
    std::string preset;
    bool auto_search = false;
    int search_refresh = 0;
    double time_budget = 0.0;
    int deco_alternations = 2;
    std::string deco_carry = "incumbent-column";
    unsigned workers = 1;
    std::string out;
    bool no_record = false;
    std::string trace_file;
};

SolverConfig build_config(const SolveArgs& a, const CLI::App* cmd) {
    SolverConfig cfg;
    cfg.algorithm = algorithm_from_string(a.algo);
    cfg.batch_size = a.batch;
    cfg.num_batches = a.batches;
    cfg.lift_dim = a.lift;
    cfg.ascent.alpha = a.alpha;
    cfg.ascent.iterations = a.iters;
    cfg.ascent.momentum = a.momentum;
    cfg.ascent.early_exit = !a.no_early_exit;
    cfg.init.method = init_method_from_string(a.init);
    cfg.init.eta = a.eta;
    cfg.init.beta = a.beta;
    cfg.init.init_scale = a.init_scale;
    cfg.init.scale_noise = !a.raw_noise;
    cfg.init.resample_idi = !a.fixed_init;
    cfg.search_refresh = a.search_refresh;
    cfg.deco_alternations = a.deco_alternations;
    if (a.deco_carry == "fresh") cfg.deco_carry = DecoCarry::Fresh;
    else if (a.deco_carry == "incumbent-column") cfg.deco_carry = DecoCarry::IncumbentColumn;
    else throw ValidationError("unknown --deco-carry value: " + a.deco_carry);
    if (a.time_budget > 0.0) cfg.time_budget_s = a.time_budget;

    if (!a.preset.empty()) {
        apply_manual_preset(cfg, a.preset);
        // Explicit step flags win over the preset values.
        if (cmd->count("--alpha")) cfg.ascent.alpha = a.alpha;
        if (cmd->count("--iters")) cfg.ascent.iterations = a.iters;
    }
    if (cmd->count("--lifted-alpha") || cmd->count("--lifted-iters")) {
        AscentParams lifted = cfg.lifted_ascent.value_or(cfg.ascent);
        if (cmd->count("--lifted-alpha")) lifted.alpha = a.lifted_alpha;
        if (cmd->count("--lifted-iters")) lifted.iterations = a.lifted_iters;
        cfg.lifted_ascent = lifted;
    }
    if (a.auto_search) cfg.search = auto_search_bounds();
    cfg.validate();
    return cfg;
}

int cmd_solve(const SolveArgs& a, const CLI::App* cmd) {
    const SolverConfig cfg = build_config(a, cmd);
    const Graph g = load_graph_file(a.graph);

    std::ofstream trace_out;
    TraceCallback trace;
    if (!a.trace_file.empty()) {
        trace_out.open(a.trace_file);
        if (!trace_out) throw Error("cannot open trace file: " + a.trace_file);
        trace = [&trace_out](std::int64_t iter, std::int64_t member, double objective) {
            trace_out << "{\"iteration\":" << iter << ",\"member\":" << member
                      << ",\"objective\":" << std::setprecision(17) << objective << "}\n";
        };
    }

    const SolveOutcome outcome = solve_per_component(g, cfg, a.seed, a.workers, trace);
    const std::string stem = fs::path(a.graph).stem().string();
    const RunRecord record = make_record(stem, a.graph, g, cfg, a.seed, outcome);
    if (!verify_record(g, record)) throw Error("record failed self-verification");

    if (!a.no_record) {
        std::string out_path = a.out;
        if (out_path.empty()) {
            const std::string name = stem + "__" + to_string(cfg.algorithm) + "__s" +
                                     std::to_string(a.seed) + ".json";
            out_path = (fs::path(default_out_dir()) / name).string();
        }
        write_record_file(out_path, record);
        std::cerr << "record: " << out_path << '\n';
    }
    std::cout << "cut=" << record.best_cut << " time=" << std::setprecision(6)
              << record.wall_time_s << '\n';
    return 0;
}

int cmd_gen(std::uint64_t n, double p, std::uint64_t seed, std::string out) {
    if (n < 1) throw ValidationError("gen: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw ValidationError("gen: p must lie in [0, 1]");
    const Graph g = generate_er(static_cast<NodeId>(n), p, seed);
    if (out.empty()) {
        std::ostringstream name;
        name << "er_n" << n << "_p" << p << "_s" << seed << ".txt";
        out = (fs::path(default_out_dir()) / name.str()).string();
    }
    write_graph_file(g, out);
    std::cout << out << " nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
    return 0;
}

int cmd_oracle(const std::string& graph, unsigned workers) {
    const Graph g = load_graph_file(graph);
    const OracleResult result = brute_force_maxcut(g, workers);
    std::cout << "optimum=" << result.optimum << '\n';
    std::string witness;
    witness.reserve(result.witness.size());
    for (std::uint8_t b : result.witness) witness.push_back(b ? '1' : '0');
    std::cout << "witness=" << witness << '\n';
    std::cout << "count_optimal=" << result.count_optimal << '\n';
    return 0;
}

struct BenchArgs {
    std::string dir;
    std::vector<std::string> graphs;
    std::string algos = "pquco";
    std::string seeds = "0";
    std::string init = "idi";
    std::int64_t batch = 64;
    std::int64_t batches = 3;
    int lift = 2;
    double alpha = 0.05;
    std::int64_t iters = 500;
    double momentum = 0.9;
    double eta = 0.8;
    double beta = 0.2;
    double init_scale = 10000.0;
    std::string params = "manual";
    std::string preset;
    std::string sweep_lift;
    double time_budget = 0.0;
    unsigned workers = 1;
    unsigned jobs = 1;
    std::string out_dir;
};

int cmd_bench(const BenchArgs& a) {
    BenchOptions options;
    options.graph_paths = a.graphs;
    if (!a.dir.empty()) {
        if (!fs::is_directory(a.dir)) throw ValidationError("bench: not a directory: " + a.dir);
        std::vector<std::string> found;
        for (const auto& entry : fs::directory_iterator(a.dir)) {
            if (!entry.is_regular_file()) continue;
            const std::string ext = entry.path().extension().string();
            if (ext == ".txt" || ext == ".graph" || ext == ".gset" || ext == ".edges")
                found.push_back(entry.path().string());
        }
        std::sort(found.begin(), found.end());
        options.graph_paths.insert(options.graph_paths.end(), found.begin(), found.end());
    }
    if (options.graph_paths.empty()) throw ValidationError("bench: no graph files found");

    options.algorithms.clear();
    for (const std::string& name : split_csv(a.algos))
        options.algorithms.push_back(algorithm_from_string(name));
    if (options.algorithms.empty()) throw ValidationError("bench: no algorithms given");

    options.seeds.clear();
    for (const std::string& s : split_csv(a.seeds)) options.seeds.push_back(std::stoull(s));

    options.base.batch_size = a.batch;
    options.base.num_batches = a.batches;
    options.base.lift_dim = a.lift;
    options.base.ascent.alpha = a.alpha;
    options.base.ascent.iterations = a.iters;
    options.base.ascent.momentum = a.momentum;
    options.base.init.method = init_method_from_string(a.init);
    options.base.init.eta = a.eta;
    options.base.init.beta = a.beta;
    options.base.init.init_scale = a.init_scale;

    if (a.params == "auto") options.auto_params = true;
    else if (a.params != "manual") throw ValidationError("--params must be manual or auto");
    if (!a.preset.empty()) options.preset = preset_from_string(a.preset);
    for (const std::string& tok : split_csv(a.sweep_lift))
        options.sweep_lift.push_back(tok == "n" ? kLiftFullDim : std::stoi(tok));
    if (a.time_budget > 0.0) options.time_budget_s = a.time_budget;
    options.workers = a.workers;
    options.jobs = a.jobs;
    options.out_dir = a.out_dir.empty()
                          ? (fs::path(default_out_dir()) / "bench").string()
                          : a.out_dir;

    const BenchResult result = run_bench(options);
    const std::string csv = aggregate_csv(result.aggregate);
    std::cout << csv;
    {
        std::ofstream csv_out(fs::path(options.out_dir) / "aggregate.csv");
        csv_out << csv;
        std::ofstream summary_out(fs::path(options.out_dir) / "summary.json");
        summary_out << bench_summary_json(result).dump(2) << '\n';
    }
    for (const RunFailure& f : result.failures)
        std::cerr << "failed: " << f.graph_id << " " << f.algorithm << " seed=" << f.seed
                  << ": " << f.message << '\n';
    if (result.records.empty() && !result.failures.empty()) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MaxCut heuristic solver: batched projected gradient ascent over "
                 "box relaxations, with lifted and dimension-alternating variants"};
    app.require_subcommand(1);

    SolveArgs sa;
    CLI::App* solve = app.add_subcommand("solve", "Solve one graph and write a run record");
    solve->add_option("--graph", sa.graph, "Edge-list graph file")->required();
    solve->add_option("--algo", sa.algo, "pquco | pluco | pdeco");
    solve->add_option("--init", sa.init, "dui | idi");
    solve->add_option("--seed", sa.seed, "Run seed");
    solve->add_option("--batch", sa.batch, "Batch size B");
    solve->add_option("--batches", sa.batches, "Batches per phase");
    solve->add_option("--lift", sa.lift, "Lift dimension l");
    solve->add_option("--alpha", sa.alpha, "Step size");
    solve->add_option("--iters", sa.iters, "Ascent iterations T");
    solve->add_option("--momentum", sa.momentum, "Heavy-ball momentum");
    solve->add_flag("--no-early-exit", sa.no_early_exit, "Always run all T iterations");
    solve->add_option("--lifted-alpha", sa.lifted_alpha, "pDECO lifted-phase step size");
    solve->add_option("--lifted-iters", sa.lifted_iters, "pDECO lifted-phase iterations");
    solve->add_option("--eta", sa.eta, "Exploration variance");
    solve->add_option("--beta", sa.beta, "Degree-importance threshold");
    solve->add_option("--init-scale", sa.init_scale, "Initial-point down-scaling");
    solve->add_flag("--raw-noise", sa.raw_noise, "Keep exploration noise unscaled");
    solve->add_flag("--fixed-init", sa.fixed_init, "Reuse one init draw across batches");
    solve->add_option("--preset", sa.preset, "Manual (alpha, T) preset: smallER | gset | largeER");
    solve->add_flag("--auto-search", sa.auto_search, "Evolutionary (alpha, T) search");
    solve->add_option("--search-refresh", sa.search_refresh, "Re-run search every k batches");
    solve->add_option("--time-budget", sa.time_budget, "Wall-clock budget in seconds");
    solve->add_option("--deco-alternations", sa.deco_alternations, "pDECO lift/project rounds");
    solve->add_option("--deco-carry", sa.deco_carry, "incumbent-column | fresh");
    solve->add_option("--workers", sa.workers, "Threads per solve");
    solve->add_option("--out", sa.out, "Record output path");
    solve->add_flag("--no-record", sa.no_record, "Skip writing the JSON record");
    solve->add_option("--trace", sa.trace_file, "Per-iteration objective trace (JSONL)");

    std::uint64_t gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "Generate a random graph file");
    gen->add_option("--n", gen_n, "Node count")->required();
    gen->add_option("--p", gen_p, "Edge probability")->required();
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--out", gen_out, "Output path");

    std::string oracle_graph;
    unsigned oracle_workers = 1;
    CLI::App* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration (n <= 26)");
    oracle->add_option("--graph", oracle_graph, "Edge-list graph file")->required();
    oracle->add_option("--workers", oracle_workers, "Enumeration threads");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand("bench", "Run a graph set and aggregate results");
    bench->add_option("--dir", ba.dir, "Directory of graph files");
    bench->add_option("--graphs", ba.graphs, "Explicit graph files");
    bench->add_option("--algos", ba.algos, "Comma-separated algorithms");
    bench->add_option("--seeds", ba.seeds, "Comma-separated seeds");
    bench->add_option("--init", ba.init, "dui | idi");
    bench->add_option("--batch", ba.batch, "Batch size B");
    bench->add_option("--batches", ba.batches, "Batches per phase");
    bench->add_option("--lift", ba.lift, "Lift dimension l");
    bench->add_option("--alpha", ba.alpha, "Step size");
    bench->add_option("--iters", ba.iters, "Ascent iterations T");
    bench->add_option("--momentum", ba.momentum, "Heavy-ball momentum");
    bench->add_option("--eta", ba.eta, "Exploration variance");
    bench->add_option("--beta", ba.beta, "Degree-importance threshold");
    bench->add_option("--init-scale", ba.init_scale, "Initial-point down-scaling");
    bench->add_option("--params", ba.params, "manual | auto");
    bench->add_option("--preset", ba.preset, "smallER | gset | largeER");
    bench->add_option("--sweep-lift", ba.sweep_lift, "Comma-separated lift dims, 'n' = node count");
    bench->add_option("--time-budget", ba.time_budget, "Per-run budget in seconds");
    bench->add_option("--workers", ba.workers, "Threads per solve");
    bench->add_option("--jobs", ba.jobs, "Concurrent runs (disables timing aggregation)");
    bench->add_option("--out-dir", ba.out_dir, "Record/summary output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(sa, solve);
        if (gen->parsed()) return cmd_gen(gen_n, gen_p, gen_seed, gen_out);
        if (oracle->parsed()) return cmd_oracle(oracle_graph, oracle_workers);
        if (bench->parsed()) return cmd_bench(ba);
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
