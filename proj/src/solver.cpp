#include "liftcut/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <utility>

#include "liftcut/errors.hpp"
#include "liftcut/parallel.hpp"

namespace liftcut {

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::pQUCO: return "pquco";
        case Algorithm::pLUCO: return "pluco";
        case Algorithm::pDECO: return "pdeco";
    }
    return "pquco";
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "pquco" || name == "pQUCO") return Algorithm::pQUCO;
    if (name == "pluco" || name == "pLUCO") return Algorithm::pLUCO;
    if (name == "pdeco" || name == "pDECO") return Algorithm::pDECO;
    throw ValidationError("unknown algorithm: " + name);
}

void SolverConfig::validate() const {
    if (batch_size < 1) throw ValidationError("batch_size must be >= 1");
    if (num_batches < 1) throw ValidationError("num_batches must be >= 1");
    if (lift_dim < 1) throw ValidationError("lift_dim must be >= 1");
    if (algorithm != Algorithm::pQUCO && lift_dim < 2)
        throw ValidationError("lifted algorithms need lift_dim >= 2");
    ascent.validate();
    if (lifted_ascent) lifted_ascent->validate();
    if (init.beta <= 0.0 || init.beta >= 1.0)
        throw ValidationError("init.beta must lie in (0, 1)");
    if (init.eta <= 0.0) throw ValidationError("init.eta must be > 0");
    if (init.init_scale < 1.0) throw ValidationError("init.init_scale must be >= 1");
    if (time_budget_s && *time_budget_s <= 0.0)
        throw ValidationError("time_budget_s must be > 0");
    if (search) search->validate();
    if (search_refresh < 0) throw ValidationError("search_refresh must be >= 0");
    if (deco_alternations < 1) throw ValidationError("deco_alternations must be >= 1");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct BatchResult {
    std::int64_t cut = 0;
    std::vector<std::uint8_t> z;
    std::int64_t serial = 0;
    std::int64_t member = 0;
};

struct RunState {
    const Graph& g;
    const SolverConfig& cfg;
    unsigned workers;
    RngStream base;
    Clock::time_point t0 = Clock::now();

    std::optional<BatchResult> global_best;
    std::vector<BatchTraceEntry> batch_trace;
    std::vector<PhaseTraceEntry> phase_trace;
    std::vector<SearchTraceEntry> search_trace;
    StageTimes stages;
    std::int64_t batch_serial = 0;

    // Per formulation kind (0 unlifted, 1 lifted): search winners, main batch
    // counts and how many searches ran, across phases.
    std::optional<Candidate> tuned[2];
    std::int64_t main_batches[2] = {0, 0};
    std::uint64_t search_runs[2] = {0, 0};

    RunState(const Graph& graph, const SolverConfig& config, std::uint64_t seed, unsigned w)
        : g(graph), cfg(config), workers(w), base(seed) {}

    bool budget_exhausted() const {
        return cfg.time_budget_s && seconds_since(t0) >= *cfg.time_budget_s;
    }
};

std::vector<double> pm1_scaled(std::span<const std::uint8_t> z, int lift_dim, double scale) {
    const std::size_t n = z.size();
    std::vector<double> mean(n * static_cast<std::size_t>(lift_dim));
    for (std::size_t v = 0; v < n; ++v)
        mean[v] = (z[v] ? 1.0 : -1.0) / scale;
    for (int col = 1; col < lift_dim; ++col)
        std::copy(mean.begin(), mean.begin() + static_cast<std::ptrdiff_t>(n),
                  mean.begin() + static_cast<std::ptrdiff_t>(col * n));
    return mean;
}

/// Runs one batch: sample around the mean, ascend, round every member, and
/// return the best member (lowest index on cut ties). `stages` is null for
/// search evaluations, whose full cost is booked to the search stage instead.
BatchResult run_batch(RunState& ctx, bool lifted, int lift_dim, std::span<const double> mean,
                      const AscentParams& params, StageTimes* stages,
                      const TraceCallback& trace) {
    const std::int64_t serial = ctx.batch_serial++;
    const RngStream batch_stream = ctx.base.split({0x6261u, static_cast<std::uint64_t>(serial)});
    const double eta_eff = ctx.cfg.init.scale_noise
                               ? ctx.cfg.init.eta / (ctx.cfg.init.init_scale * ctx.cfg.init.init_scale)
                               : ctx.cfg.init.eta;

    Clock::time_point mark = Clock::now();
    DenseState state = gaussian_batch(mean, ctx.g.node_count(), lift_dim, eta_eff,
                                      ctx.cfg.batch_size, batch_stream, ctx.workers);
    if (stages) stages->init_s += seconds_since(mark);

    mark = Clock::now();
    ascend(ctx.g, state, params, ctx.workers, trace);
    if (stages) stages->ascent_s += seconds_since(mark);

    mark = Clock::now();
    std::vector<std::int64_t> cuts(static_cast<std::size_t>(ctx.cfg.batch_size));
    parallel_for(0, cuts.size(), ctx.workers, [&](std::size_t j) {
        const auto m = static_cast<std::int64_t>(j);
        const std::vector<std::uint8_t> z =
            lifted ? round_lifted(state, m) : round_unlifted(state.member(m));
        cuts[j] = cut_value(ctx.g, z);
    });
    std::size_t best_j = 0;
    for (std::size_t j = 1; j < cuts.size(); ++j)
        if (cuts[j] > cuts[best_j]) best_j = j;
    BatchResult result;
    result.cut = cuts[best_j];
    const auto bm = static_cast<std::int64_t>(best_j);
    result.z = lifted ? round_lifted(state, bm) : round_unlifted(state.member(bm));
    result.serial = serial;
    result.member = bm;
    if (stages) stages->rounding_s += seconds_since(mark);
    return result;
}

void note_batch(RunState& ctx, const BatchResult& result, const char* kind,
                const AscentParams& params) {
    if (!ctx.global_best || result.cut > ctx.global_best->cut) ctx.global_best = result;
    ctx.batch_trace.push_back({result.serial, kind, params.alpha, params.iterations,
                               result.cut, ctx.global_best->cut});
}

/// Population search over (alpha, T) seeded from the incumbent mean. Every
/// candidate evaluation is a full batch run; its best cut is the fitness.
Candidate run_search(RunState& ctx, bool lifted, int lift_dim,
                     std::span<const std::uint8_t> incumbent, const AscentParams& phase_params) {
    const Clock::time_point mark = Clock::now();
    const int kind = lifted ? 1 : 0;
    RngStream stream = ctx.base.split(
        {0x6576u, static_cast<std::uint64_t>(kind), ctx.search_runs[kind]++});
    const std::vector<double> mean = pm1_scaled(incumbent, lift_dim, ctx.cfg.init.init_scale);

    const EvaluateFn evaluate = [&](const Candidate& cand) {
        if (ctx.budget_exhausted()) throw Error("time budget exhausted during search");
        AscentParams p = phase_params;
        p.alpha = cand.alpha();
        p.iterations = cand.iterations;
        const BatchResult result = run_batch(ctx, lifted, lift_dim, mean, p, nullptr, nullptr);
        note_batch(ctx, result, "search", p);
        return static_cast<double>(result.cut);
    };
    const SearchTraceFn on_eval = [&ctx](const SearchTraceEntry& e) {
        ctx.search_trace.push_back(e);
    };

    const Candidate winner =
        evolve(sample_population(*ctx.cfg.search, stream), evaluate, ctx.cfg.search->rounds,
               stream, on_eval);
    ctx.stages.search_s += seconds_since(mark);
    return winner;
}

bool search_due(const RunState& ctx, int kind) {
    if (!ctx.cfg.search) return false;
    const std::int64_t count = ctx.main_batches[kind];
    if (ctx.cfg.search_refresh > 0) return (count - 1) % ctx.cfg.search_refresh == 0;
    return !ctx.tuned[kind] && count == 1;
}

/// One batched phase on either formulation. Returns the best assignment found
/// in the phase, or the carry unchanged when the budget allowed no batch.
std::optional<std::vector<std::uint8_t>> run_phase(
    RunState& ctx, bool lifted, int phase_idx,
    std::optional<std::vector<std::uint8_t>> carry, const TraceCallback& trace) {
    const SolverConfig& cfg = ctx.cfg;
    const int lift_dim = lifted ? cfg.lift_dim : 1;
    const int kind = lifted ? 1 : 0;
    AscentParams params = lifted ? cfg.lifted_ascent.value_or(cfg.ascent) : cfg.ascent;
    if (ctx.tuned[kind]) {
        params.alpha = ctx.tuned[kind]->alpha();
        params.iterations = ctx.tuned[kind]->iterations;
    }

    std::optional<BatchResult> phase_best;
    std::optional<std::vector<std::uint8_t>> recenter = std::move(carry);
    for (std::int64_t b = 0; b < cfg.num_batches; ++b) {
        // The very first batch always runs so a result exists even under a
        // budget that expired immediately.
        if (ctx.batch_serial > 0 && ctx.budget_exhausted()) break;

        std::vector<double> mean;
        if (b == 0) {
            const Clock::time_point mark = Clock::now();
            const std::uint64_t init_word =
                cfg.init.resample_idi ? static_cast<std::uint64_t>(ctx.batch_serial) : 0u;
            const RngStream init_stream = ctx.base.split({0x696eu, cfg.init.seed, init_word});
            const bool carry_first_column =
                recenter && (lift_dim == 1 || cfg.deco_carry == DecoCarry::IncumbentColumn);
            mean = lifted_init_mean(ctx.g, cfg.init, lift_dim, init_stream);
            if (carry_first_column)
                for (std::size_t v = 0; v < recenter->size(); ++v)
                    mean[v] = (*recenter)[v] ? 1.0 : -1.0;
            scale_down(mean, cfg.init.init_scale);
            ctx.stages.init_s += seconds_since(mark);
        } else {
            mean = pm1_scaled(*recenter, lift_dim, cfg.init.init_scale);
        }

        const BatchResult result =
            run_batch(ctx, lifted, lift_dim, mean, params, &ctx.stages, trace);
        note_batch(ctx, result, "main", params);
        if (!phase_best || result.cut > phase_best->cut) phase_best = result;
        recenter = result.z;
        ++ctx.main_batches[kind];

        if (search_due(ctx, kind) && !ctx.budget_exhausted()) {
            const Candidate winner = run_search(ctx, lifted, lift_dim, *recenter, params);
            params.alpha = winner.alpha();
            params.iterations = winner.iterations;
            ctx.tuned[kind] = winner;
        }
    }

    if (!phase_best) return recenter;
    ctx.phase_trace.push_back({phase_idx, lifted ? "luco" : "quco", phase_best->cut});
    return phase_best->z;
}

SolveOutcome finalize(RunState& ctx, Algorithm algorithm, std::uint64_t seed) {
    if (!ctx.global_best) throw Error("solver produced no batch result");
    SolveOutcome out;
    out.best.assignment = std::move(ctx.global_best->z);
    out.best.cut_value = ctx.global_best->cut;
    out.best.algorithm = to_string(algorithm);
    out.best.seed = seed;
    out.best.batch_index = ctx.global_best->serial;
    out.best.member_index = ctx.global_best->member;
    out.best.wall_time_s = seconds_since(ctx.t0);
    out.batch_trace = std::move(ctx.batch_trace);
    out.phase_trace = std::move(ctx.phase_trace);
    out.search_trace = std::move(ctx.search_trace);
    out.stage_times = ctx.stages;
    out.batches_run = ctx.batch_serial;
    return out;
}

void require_edges(const Graph& g) {
    if (g.edge_count() < 1)
        throw ValidationError("solver requires a graph with at least one edge");
}

} // namespace

SolveOutcome pquco(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                   unsigned workers, const TraceCallback& trace) {
    cfg.validate();
    require_edges(g);
    RunState ctx(g, cfg, seed, workers);
    run_phase(ctx, false, 0, std::nullopt, trace);
    return finalize(ctx, Algorithm::pQUCO, seed);
}

SolveOutcome pluco(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                   unsigned workers, const TraceCallback& trace) {
    cfg.validate();
    require_edges(g);
    if (cfg.lift_dim < 2) throw ValidationError("pluco needs lift_dim >= 2");
    RunState ctx(g, cfg, seed, workers);
    run_phase(ctx, true, 0, std::nullopt, trace);
    return finalize(ctx, Algorithm::pLUCO, seed);
}

SolveOutcome pdeco(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                   unsigned workers, const TraceCallback& trace) {
    cfg.validate();
    require_edges(g);
    if (cfg.lift_dim < 2) throw ValidationError("pdeco needs lift_dim >= 2");
    RunState ctx(g, cfg, seed, workers);
    std::optional<std::vector<std::uint8_t>> carry;
    int phase_idx = 0;
    for (int round = 0;; ++round) {
        if (cfg.time_budget_s) {
            if (ctx.batch_serial > 0 && ctx.budget_exhausted()) break;
        } else if (round >= cfg.deco_alternations) {
            break;
        }
        const std::int64_t before = ctx.batch_serial;
        carry = run_phase(ctx, false, phase_idx++, std::move(carry), trace);
        carry = run_phase(ctx, true, phase_idx++, std::move(carry), trace);
        if (cfg.time_budget_s && ctx.batch_serial == before) break;
    }
    return finalize(ctx, Algorithm::pDECO, seed);
}

SolveOutcome solve_per_component(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                                 unsigned workers, const TraceCallback& trace) {
    cfg.validate();
    const Clock::time_point t0 = Clock::now();
    const auto dispatch = [&](const Graph& part, std::uint64_t part_seed) {
        switch (cfg.algorithm) {
            case Algorithm::pQUCO: return pquco(part, cfg, part_seed, workers, trace);
            case Algorithm::pLUCO: return pluco(part, cfg, part_seed, workers, trace);
            case Algorithm::pDECO: return pdeco(part, cfg, part_seed, workers, trace);
        }
        throw ValidationError("unknown algorithm");
    };

    const std::vector<std::vector<NodeId>> components = g.connected_components();
    if (components.size() == 1 && g.edge_count() > 0) return dispatch(g, seed);

    SolveOutcome out;
    out.best.assignment.assign(g.node_count(), 0);
    out.best.algorithm = to_string(cfg.algorithm);
    out.best.seed = seed;
    const RngStream seeder(seed);
    int solved = 0;
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        const std::vector<NodeId>& comp = components[ci];
        if (comp.size() < 2) continue;
        const Graph sub = g.induced_subgraph(comp);
        if (sub.edge_count() == 0) continue;
        const std::uint64_t sub_seed = seeder.split({0x6370u, ci}).at(0);
        SolveOutcome part = dispatch(sub, sub_seed);
        for (std::size_t i = 0; i < comp.size(); ++i)
            out.best.assignment[comp[i]] = part.best.assignment[i];
        out.best.cut_value += part.best.cut_value;
        out.best.batch_index = part.best.batch_index;
        out.best.member_index = part.best.member_index;
        out.batches_run += part.batches_run;
        out.stage_times.init_s += part.stage_times.init_s;
        out.stage_times.ascent_s += part.stage_times.ascent_s;
        out.stage_times.rounding_s += part.stage_times.rounding_s;
        out.stage_times.search_s += part.stage_times.search_s;
        for (auto& e : part.batch_trace) out.batch_trace.push_back(std::move(e));
        for (auto& e : part.phase_trace) out.phase_trace.push_back(std::move(e));
        for (auto& e : part.search_trace) out.search_trace.push_back(std::move(e));
        ++solved;
    }
    if (solved != 1) {
        out.best.batch_index = -1;
        out.best.member_index = -1;
    }
    out.best.wall_time_s = seconds_since(t0);
    return out;
}

} // namespace liftcut
