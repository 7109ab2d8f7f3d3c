#include "liftcut/objectives.hpp"

#include <cmath>
#include <cstdlib>

namespace liftcut {

namespace {

constexpr double kBoxTolerance = 1e-12;

void require_in_box(std::span<const double> x, const char* op) {
    for (double v : x)
        if (!(std::fabs(v) <= 1.0 + kBoxTolerance))
            throw ValidationError(std::string(op) + ": entry outside [-1, 1]");
}

void require_length(std::size_t got, std::size_t want, const char* op) {
    if (got != want)
        throw ShapeError(std::string(op) + ": expected length " + std::to_string(want) +
                         ", got " + std::to_string(got));
}

} // namespace

std::int64_t cut_value(const Graph& g, std::span<const std::uint8_t> z) {
    require_length(z.size(), g.node_count(), "cut_value");
    for (std::uint8_t b : z)
        if (b > 1) throw ValidationError("cut_value: assignment entries must be 0 or 1");
    std::int64_t crossing = 0;
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v && z[u] != z[v]) ++crossing;
    return crossing;
}

double quco_objective(const Graph& g, std::span<const double> x) {
    require_length(x.size(), g.node_count(), "quco_objective");
    require_in_box(x, "quco_objective");
    std::vector<double> lx(x.size());
    g.laplacian_apply(x, lx);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * lx[i];
    return acc;
}

double luco_objective(const Graph& g, const DenseState& state, std::int64_t member) {
    require_length(static_cast<std::size_t>(state.nodes), g.node_count(), "luco_objective");
    double acc = 0.0;
    for (int i = 0; i < state.lift_dim; ++i) {
        auto col = state.column(member, i);
        require_in_box(col, "luco_objective");
        std::vector<double> lx(col.size());
        g.laplacian_apply(col, lx);
        for (std::size_t v = 0; v < col.size(); ++v) acc += col[v] * lx[v];
    }
    return acc;
}

void ascent_direction_unlifted(const Graph& g, std::span<const double> x,
                               std::span<double> out) {
    g.laplacian_apply(x, out);
}

void ascent_direction_lifted(const Graph& g, const DenseState& state, std::int64_t member,
                             std::span<double> out) {
    const std::size_t n = static_cast<std::size_t>(state.nodes);
    require_length(n, g.node_count(), "ascent_direction_lifted");
    require_length(out.size(), n * static_cast<std::size_t>(state.lift_dim),
                   "ascent_direction_lifted");
    for (int i = 0; i < state.lift_dim; ++i)
        g.laplacian_apply(state.column(member, i), out.subspan(n * static_cast<std::size_t>(i), n));
}

void project_box(std::span<double> values) {
    for (double& v : values) v = v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v);
}

void project_box(DenseState& state) { project_box(std::span<double>(state.values)); }

std::vector<std::uint8_t> round_unlifted(std::span<const double> x) {
    std::vector<std::uint8_t> z(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) z[v] = x[v] > 0.0 ? 1 : 0;
    return z;
}

std::vector<std::uint8_t> round_lifted(const DenseState& state, std::int64_t member) {
    const std::size_t n = static_cast<std::size_t>(state.nodes);
    std::vector<std::uint8_t> z(n);
    for (std::size_t v = 0; v < n; ++v) {
        double row_sum = 0.0;
        for (int i = 0; i < state.lift_dim; ++i) row_sum += state.column(member, i)[v];
        z[v] = row_sum >= 0.0 ? 1 : 0;
    }
    return z;
}

namespace {

bool is_boundary(std::span<const double> x) {
    for (double v : x)
        if (v != 1.0 && v != -1.0) return false;
    return true;
}

bool is_constant(std::span<const double> x) {
    for (double v : x)
        if (v != x[0]) return false;
    return true;
}

} // namespace

bool is_maxcut_fixed_point_unlifted(const Graph& g, std::span<const double> x, double alpha) {
    require_length(x.size(), g.node_count(), "is_maxcut_fixed_point_unlifted");
    if (alpha <= 0.0) throw ValidationError("is_maxcut_fixed_point_unlifted: alpha must be > 0");
    if (!is_boundary(x) || is_constant(x)) return false;
    std::vector<double> step(x.size());
    g.laplacian_apply(x, step);
    for (std::size_t v = 0; v < x.size(); ++v) {
        double moved = x[v] + alpha * step[v];
        moved = moved < -1.0 ? -1.0 : (moved > 1.0 ? 1.0 : moved);
        if (moved != x[v]) return false;
    }
    return true;
}

bool is_maxcut_fixed_point_lifted(const Graph& g, const DenseState& state,
                                  std::int64_t member) {
    require_length(static_cast<std::size_t>(state.nodes), g.node_count(),
                   "is_maxcut_fixed_point_lifted");
    auto values = state.member(member);
    if (!is_boundary(values)) return false;
    // Excluded set: all rows identical (X = e_n c^T).
    bool rows_identical = true;
    for (std::int64_t v = 1; v < state.nodes && rows_identical; ++v)
        for (int i = 0; i < state.lift_dim; ++i)
            if (state.column(member, i)[v] != state.column(member, i)[0]) {
                rows_identical = false;
                break;
            }
    return !rows_identical;
}

} // namespace liftcut
