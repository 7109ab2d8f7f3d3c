#include "liftcut/ascent.hpp"

#include <cmath>
#include <string>

#include "liftcut/parallel.hpp"

namespace liftcut {

void AscentParams::validate() const {
    if (!(alpha > 0.0)) throw ValidationError("ascent: alpha must be > 0");
    if (iterations < 1) throw ValidationError("ascent: iterations must be >= 1");
    if (!(momentum >= 0.0 && momentum < 1.0))
        throw ValidationError("ascent: momentum must lie in [0, 1)");
}

std::vector<bool> detect_fixed_point(const DenseState& prev, const DenseState& next,
                                     double tol) {
    if (!prev.same_shape(next)) throw ShapeError("detect_fixed_point: shape mismatch");
    std::vector<bool> flags(static_cast<std::size_t>(prev.batch));
    for (std::int64_t j = 0; j < prev.batch; ++j) {
        auto a = prev.member(j);
        auto b = next.member(j);
        double max_change = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            max_change = std::max(max_change, std::fabs(a[k] - b[k]));
        flags[static_cast<std::size_t>(j)] = max_change <= tol;
    }
    return flags;
}

namespace {

constexpr double kInteriorExitTol = 1e-12;

struct MemberWorkspace {
    std::vector<double> velocity;
    std::vector<double> direction;
};

} // namespace

void ascend(const Graph& g, DenseState& state, const AscentParams& params, unsigned workers,
            const TraceCallback& trace) {
    params.validate();
    if (static_cast<std::size_t>(state.nodes) != g.node_count())
        throw ShapeError("ascend: state row dimension " + std::to_string(state.nodes) +
                         " != node count " + std::to_string(g.node_count()));
    const std::size_t n = static_cast<std::size_t>(state.nodes);
    const std::size_t entries = n * static_cast<std::size_t>(state.lift_dim);

    parallel_for(0, static_cast<std::size_t>(state.batch), workers, [&](std::size_t j) {
        MemberWorkspace ws;
        ws.velocity.assign(entries, 0.0);
        ws.direction.resize(entries);
        auto x = state.member(static_cast<std::int64_t>(j));

        for (std::int64_t it = 0; it < params.iterations; ++it) {
            for (int col = 0; col < state.lift_dim; ++col) {
                const std::size_t off = static_cast<std::size_t>(col) * n;
                g.laplacian_apply(std::span<const double>(x.data() + off, n),
                                  std::span<double>(ws.direction.data() + off, n));
            }
            double max_change = 0.0;
            bool boundary = true;
            for (std::size_t k = 0; k < entries; ++k) {
                double& v = ws.velocity[k];
                v = params.momentum * v + ws.direction[k];
                const double raw = x[k] + params.alpha * v;
                if (!std::isfinite(raw))
                    throw NumericError("ascend: non-finite value at iteration " +
                                       std::to_string(it) + ", member " + std::to_string(j));
                const double clamped = raw < -1.0 ? -1.0 : (raw > 1.0 ? 1.0 : raw);
                max_change = std::max(max_change, std::fabs(clamped - x[k]));
                if (clamped != 1.0 && clamped != -1.0) boundary = false;
                x[k] = clamped;
            }
            if (trace) {
                double obj = 0.0;
                std::vector<double> lx(n);
                for (int col = 0; col < state.lift_dim; ++col) {
                    const std::size_t off = static_cast<std::size_t>(col) * n;
                    const std::span<const double> xc(x.data() + off, n);
                    g.laplacian_apply(xc, lx);
                    for (std::size_t v = 0; v < n; ++v) obj += xc[v] * lx[v];
                }
                trace(it, static_cast<std::int64_t>(j), obj);
            }
            // Remaining iterations cannot move a member that has stopped:
            // boundary states need an exact hold, interior ones a 1e-12 one.
            if (params.early_exit && !trace) {
                if (boundary ? max_change == 0.0 : max_change <= kInteriorExitTol) break;
            }
        }
    });
}

} // namespace liftcut
