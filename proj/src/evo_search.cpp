#include "liftcut/evo_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "liftcut/errors.hpp"
#include "liftcut/log.hpp"

namespace liftcut {

void SearchConfig::validate() const {
    if (t_lower < 1 || t_lower > t_upper)
        throw ValidationError("search: need 1 <= t_lower <= t_upper");
    if (e_lower > e_upper) throw ValidationError("search: need e_lower <= e_upper");
    if (population_size < 2 || population_size % 2 != 0)
        throw ValidationError("search: population size must be even and >= 2");
    if (rounds < 1) throw ValidationError("search: rounds must be >= 1");
    if (e_lower < kExponentClipLow || e_upper > kExponentClipHigh)
        warn("search exponent bounds [" + std::to_string(e_lower) + ", " +
             std::to_string(e_upper) + "] extend beyond the fixed perturbation clip range [-4, -1]");
}

double Candidate::alpha() const { return std::pow(10.0, exponent); }

std::vector<Candidate> sample_population(const SearchConfig& cfg, RngStream& stream) {
    cfg.validate();
    std::vector<Candidate> population(static_cast<std::size_t>(cfg.population_size));
    for (Candidate& c : population) {
        c.iterations = stream.next_int(cfg.t_lower, cfg.t_upper);
        c.exponent = stream.next_uniform(cfg.e_lower, cfg.e_upper);
    }
    return population;
}

double perturb_exponent(double exponent, RngStream& stream) {
    const double moved = exponent + 0.2 * stream.next_normal();
    return std::clamp(moved, kExponentClipLow, kExponentClipHigh);
}

std::int64_t perturb_iterations(std::int64_t t0, RngStream& stream) {
    const double eps = stream.next_unit();
    const auto scaled = static_cast<std::int64_t>(
        std::floor(static_cast<double>(t0) * (1.0 + 0.2 * (2.0 * eps - 1.0))));
    return std::max<std::int64_t>(1, scaled);
}

namespace {

// Fitness descending; ties prefer the cheaper candidate (smaller T, then e).
bool ranks_before(const Candidate& a, const Candidate& b) {
    const double fa = a.fitness.value_or(-std::numeric_limits<double>::infinity());
    const double fb = b.fitness.value_or(-std::numeric_limits<double>::infinity());
    if (fa != fb) return fa > fb;
    if (a.iterations != b.iterations) return a.iterations < b.iterations;
    return a.exponent < b.exponent;
}

} // namespace

Candidate evolve(std::vector<Candidate> population, const EvaluateFn& evaluate, int rounds,
                 RngStream& stream, const SearchTraceFn& trace) {
    if (population.empty() || population.size() % 2 != 0)
        throw ValidationError("evolve: population size must be even and >= 2");
    if (rounds < 1) throw ValidationError("evolve: rounds must be >= 1");

    const std::size_t half = population.size() / 2;
    for (int round = 1; round <= rounds; ++round) {
        for (Candidate& c : population) {
            if (c.fitness) continue;  // survivors keep their score
            try {
                c.fitness = evaluate(c);
            } catch (const std::exception&) {
                c.fitness = -std::numeric_limits<double>::infinity();
            }
            if (trace) trace({round, c.exponent, c.iterations, *c.fitness});
        }
        std::stable_sort(population.begin(), population.end(), ranks_before);
        for (std::size_t slot = half; slot < population.size(); ++slot) {
            const Candidate& parent =
                population[static_cast<std::size_t>(stream.next_int(0, static_cast<std::int64_t>(half) - 1))];
            Candidate child;
            child.exponent = perturb_exponent(parent.exponent, stream);
            child.iterations = perturb_iterations(parent.iterations, stream);
            population[slot] = child;
        }
    }
    // Survivors are ranked first and always evaluated.
    return population.front();
}

} // namespace liftcut
