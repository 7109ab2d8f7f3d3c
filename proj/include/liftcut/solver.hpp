#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftcut/ascent.hpp"
#include "liftcut/evo_search.hpp"
#include "liftcut/graph.hpp"
#include "liftcut/init.hpp"
#include "liftcut/objectives.hpp"

namespace liftcut {

enum class Algorithm { pQUCO, pLUCO, pDECO };

const char* to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

/// What seeds the lifted mean at the start of a pDECO lifted phase: the
/// incumbent binary vector in column 0 with fresh init draws elsewhere, or
/// fresh init draws in every column.
enum class DecoCarry { IncumbentColumn, Fresh };

struct SolverConfig {
    Algorithm algorithm = Algorithm::pQUCO;
    std::int64_t batch_size = 64;               // B
    int lift_dim = 2;                           // l (>= 2 for pLUCO / pDECO)
    AscentParams ascent;                        // unlifted phase (and pLUCO default)
    std::optional<AscentParams> lifted_ascent;  // pDECO lifted-phase override
    InitConfig init;
    std::int64_t num_batches = 3;               // batches per phase
    std::optional<double> time_budget_s;        // checked between batches only
    std::optional<SearchConfig> search;         // evolutionary (alpha, T) search
    int search_refresh = 0;                     // re-run search every k batches; 0 = once
    int deco_alternations = 2;                  // lift/project rounds without a budget
    DecoCarry deco_carry = DecoCarry::IncumbentColumn;

    void validate() const;
};

struct BatchTraceEntry {
    std::int64_t serial = 0;
    std::string kind;  // "main" or "search"
    double alpha = 0.0;
    std::int64_t iterations = 0;
    std::int64_t batch_best = 0;
    std::int64_t best_so_far = 0;
};

struct PhaseTraceEntry {
    int phase = 0;
    std::string kind;  // "quco" or "luco"
    std::int64_t best_after = 0;
};

struct StageTimes {
    double init_s = 0.0;
    double ascent_s = 0.0;
    double rounding_s = 0.0;
    double search_s = 0.0;
};

struct SolveOutcome {
    CutSolution best;
    std::vector<BatchTraceEntry> batch_trace;
    std::vector<PhaseTraceEntry> phase_trace;
    std::vector<SearchTraceEntry> search_trace;
    StageTimes stage_times;
    std::int64_t batches_run = 0;  // realized batch budget (main + search)
};

/// Algorithm 1-style batched run on the unlifted objective. Requires >= 1 edge.
SolveOutcome pquco(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                   unsigned workers = 1, const TraceCallback& trace = nullptr);

/// Lifted variant: n x l states, per-column init, row-sum rounding.
SolveOutcome pluco(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                   unsigned workers = 1, const TraceCallback& trace = nullptr);

/// Dimension-alternating runs: unlifted phase, lift, lifted phase, project back,
/// repeat while the budget allows, threading the incumbent between phases.
SolveOutcome pdeco(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                   unsigned workers = 1, const TraceCallback& trace = nullptr);

/// Runs the configured algorithm independently on each connected component and
/// concatenates the assignments. Trivial components contribute side 0, cut 0.
SolveOutcome solve_per_component(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                                 unsigned workers = 1, const TraceCallback& trace = nullptr);

} // namespace liftcut
