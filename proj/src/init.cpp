#include "liftcut/init.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "liftcut/objectives.hpp"
#include "liftcut/parallel.hpp"

namespace liftcut {

const char* to_string(InitMethod m) { return m == InitMethod::DUI ? "dui" : "idi"; }

InitMethod init_method_from_string(const std::string& name) {
    if (name == "dui" || name == "DUI") return InitMethod::DUI;
    if (name == "idi" || name == "IDI") return InitMethod::IDI;
    throw ValidationError("unknown init method: " + name);
}

std::vector<double> dui_init(const Graph& g, RngStream stream) {
    if (g.max_degree() < 1)
        throw ValidationError("dui_init: graph has no edges (MaxCut is trivially 0)");
    const double max_deg = static_cast<double>(g.max_degree());
    std::vector<double> x(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const double bound = 1.0 - static_cast<double>(g.degree(v)) / max_deg;
        x[v] = (2.0 * stream.unit_at(v) - 1.0) * bound;
    }
    return x;
}

std::vector<double> idi_init(const Graph& g, double beta, RngStream stream) {
    const DegreeStats stats = g.degree_stats();
    const double threshold = stats.mean + beta * stats.std_dev;
    const std::size_t n = g.node_count();

    // Important nodes get a random sign; a_v / b_v mark the +1 / -1 assignments.
    std::vector<std::int8_t> sign(n, 0);
    for (NodeId v = 0; v < n; ++v)
        if (static_cast<double>(g.degree(v)) > threshold)
            sign[v] = (stream.at(v) & 1u) ? 1 : -1;

    const RngStream tie_stream = stream.split({0x7469u});  // "ti"
    std::vector<double> x(n);
    for (NodeId v = 0; v < n; ++v) {
        if (sign[v] != 0) {
            x[v] = static_cast<double>(sign[v]);
            continue;
        }
        // (Aa)_v / (Ab)_v: important neighbors assigned +1 / -1.
        std::int64_t plus = 0, minus = 0;
        for (NodeId u : g.neighbors(v)) {
            if (sign[u] > 0) ++plus;
            else if (sign[u] < 0) ++minus;
        }
        if (plus == minus)
            x[v] = (tie_stream.at(v) & 1u) ? 1.0 : -1.0;
        else
            x[v] = plus < minus ? 1.0 : -1.0;  // side with fewer important neighbors
    }
    return x;
}

void scale_down(std::span<double> x, double init_scale) {
    if (init_scale < 1.0) throw ValidationError("scale_down: init_scale must be >= 1");
    for (double& v : x) v /= init_scale;
}

DenseState gaussian_batch(std::span<const double> mean, std::int64_t nodes, int lift_dim,
                          double eta, std::int64_t batch, const RngStream& stream,
                          unsigned workers) {
    if (eta <= 0.0) throw ValidationError("gaussian_batch: eta must be > 0");
    const std::size_t entries = static_cast<std::size_t>(nodes) * static_cast<std::size_t>(lift_dim);
    if (mean.size() != entries)
        throw ShapeError("gaussian_batch: mean has " + std::to_string(mean.size()) +
                         " entries, expected " + std::to_string(entries));
    DenseState state(nodes, lift_dim, batch);
    const double noise_scale = std::sqrt(eta);
    parallel_for(0, static_cast<std::size_t>(batch), workers, [&](std::size_t j) {
        RngStream member_stream = stream.split({0x6d62u, j});  // "mb"
        auto out = state.member(static_cast<std::int64_t>(j));
        for (std::size_t k = 0; k < entries; ++k)
            out[k] = mean[k] + noise_scale * member_stream.next_normal();
        project_box(out);
    });
    return state;
}

std::vector<double> lifted_init_mean(const Graph& g, const InitConfig& cfg, int lift_dim,
                                     const RngStream& stream) {
    const std::size_t n = g.node_count();
    std::vector<double> mean(n * static_cast<std::size_t>(lift_dim));
    for (int col = 0; col < lift_dim; ++col) {
        const RngStream col_stream = stream.split({0x636fu, static_cast<std::uint64_t>(col)});
        std::vector<double> x = cfg.method == InitMethod::DUI
                                    ? dui_init(g, col_stream)
                                    : idi_init(g, cfg.beta, col_stream);
        std::copy(x.begin(), x.end(), mean.begin() + static_cast<std::size_t>(col) * n);
    }
    return mean;
}

} // namespace liftcut
