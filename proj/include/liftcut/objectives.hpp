#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "liftcut/dense_state.hpp"
#include "liftcut/graph.hpp"

namespace liftcut {

/// Binary node assignment with its cut value and run provenance.
struct CutSolution {
    std::vector<std::uint8_t> assignment;  // z in {0,1}^n
    std::int64_t cut_value = 0;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::int64_t batch_index = -1;
    std::int64_t member_index = -1;
    double wall_time_s = 0.0;
};

/// Number of edges with endpoints on opposite sides of z.
std::int64_t cut_value(const Graph& g, std::span<const std::uint8_t> z);

/// x^T L x = sum over edges of (x_u - x_v)^2, for x in [-1,1]^n.
/// Entries beyond the box by more than 1e-12 raise ValidationError.
double quco_objective(const Graph& g, std::span<const double> x);

/// tr(X^T L X): column-wise quadratic form over an n x l state.
double luco_objective(const Graph& g, const DenseState& state, std::int64_t member = 0);

/// The ascent direction g(x) = Lx (half the analytic gradient of x^T L x;
/// the factor is absorbed into the step size).
void ascent_direction_unlifted(const Graph& g, std::span<const double> x, std::span<double> out);

/// Column-wise Lx over one member: J(X) = LX.
void ascent_direction_lifted(const Graph& g, const DenseState& state, std::int64_t member,
                             std::span<double> out);

/// Clamp every entry to [-1, 1] in place. Idempotent.
void project_box(std::span<double> values);
void project_box(DenseState& state);

/// z_v = 1{x_v > 0} (strict: exact zeros map to 0).
std::vector<std::uint8_t> round_unlifted(std::span<const double> x);

/// z_v = 1{sum_i X_{v,i} >= 0} (inclusive: zero row sums map to 1).
std::vector<std::uint8_t> round_lifted(const DenseState& state, std::int64_t member = 0);

/// True iff x is boundary-valued (+-1), not constant, and survives one
/// projected ascent step with step size alpha unchanged.
bool is_maxcut_fixed_point_unlifted(const Graph& g, std::span<const double> x, double alpha);

/// Lifted analogue: X in {-1,1}^{n x l} with rows not all identical.
bool is_maxcut_fixed_point_lifted(const Graph& g, const DenseState& state,
                                  std::int64_t member = 0);

} // namespace liftcut
