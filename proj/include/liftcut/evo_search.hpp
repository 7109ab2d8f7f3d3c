#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "liftcut/rng.hpp"

namespace liftcut {

/// Hard clip range for perturbed step-size exponents.
inline constexpr double kExponentClipLow = -4.0;
inline constexpr double kExponentClipHigh = -1.0;

struct SearchConfig {
    std::int64_t t_lower = 3000;
    std::int64_t t_upper = 10000;
    double e_lower = -4.0;
    double e_upper = -1.0;
    int population_size = 6;
    int rounds = 5;

    void validate() const;
};

/// One (step-size exponent, iteration count) pair; alpha = 10^exponent.
struct Candidate {
    double exponent = 0.0;
    std::int64_t iterations = 1;
    std::optional<double> fitness;

    double alpha() const;
};

/// population_size candidates with T ~ U{t_lower..t_upper}, e ~ U[e_lower, e_upper].
std::vector<Candidate> sample_population(const SearchConfig& cfg, RngStream& stream);

/// e' = clamp(e + 0.2 * N(0,1)) to [-4, -1].
double perturb_exponent(double exponent, RngStream& stream);

/// T' = floor(T0 * (1 + 0.2 * (2 * U(0,1) - 1))), clamped to >= 1.
std::int64_t perturb_iterations(std::int64_t t0, RngStream& stream);

/// One search trace row, emitted after each candidate evaluation.
struct SearchTraceEntry {
    int round = 0;
    double exponent = 0.0;
    std::int64_t iterations = 0;
    double fitness = 0.0;
};

using EvaluateFn = std::function<double(const Candidate&)>;
using SearchTraceFn = std::function<void(const SearchTraceEntry&)>;

/// Population-based search: per round, evaluate unevaluated candidates, rank by
/// fitness (ties prefer smaller T then smaller e), keep the top half and replace
/// the bottom half with perturbed copies of uniformly chosen survivors. Returns
/// the fittest candidate seen. Evaluation failures score -infinity.
Candidate evolve(std::vector<Candidate> population, const EvaluateFn& evaluate, int rounds,
                 RngStream& stream, const SearchTraceFn& trace = nullptr);

} // namespace liftcut
