#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liftcut/dense_state.hpp"
#include "liftcut/graph.hpp"
#include "liftcut/rng.hpp"

namespace liftcut {

enum class InitMethod { DUI, IDI };

struct InitConfig {
    InitMethod method = InitMethod::IDI;
    double beta = 0.2;            // IDI importance threshold
    double eta = 0.8;             // exploration variance
    double init_scale = 10000.0;  // down-scaling divisor for initial vectors
    std::uint64_t seed = 0;
    bool resample_idi = true;     // fresh IDI draw per batch (false: fixed per run)
    // When true the exploration noise is scaled down together with the mean,
    // so the batch is (mean + sqrt(eta) * xi) / init_scale. When false the
    // noise keeps its raw sqrt(eta) magnitude around the scaled mean.
    bool scale_noise = true;
};

const char* to_string(InitMethod m);
InitMethod init_method_from_string(const std::string& name);

/// Entry v drawn uniformly from [-(1 - d_v / max_degree), +(1 - d_v / max_degree)].
/// Requires at least one edge. Higher-degree nodes start closer to zero.
std::vector<double> dui_init(const Graph& g, RngStream stream);

/// Importance-based +-1 init: nodes with d_v > mean + beta * sigma get a random
/// sign; every other node joins the side with fewer +-assigned important
/// neighbors (random on ties).
std::vector<double> idi_init(const Graph& g, double beta, RngStream stream);

/// Entrywise division by init_scale (>= 1).
void scale_down(std::span<double> x, double init_scale);

/// B members drawn as mean + sqrt(eta) * standard normal noise, then projected
/// onto the box. Member j depends only on (stream key, j), so generation is
/// reproducible at any parallelism level. `mean` has n * l entries (column-major).
DenseState gaussian_batch(std::span<const double> mean, std::int64_t nodes, int lift_dim,
                          double eta, std::int64_t batch, const RngStream& stream,
                          unsigned workers = 1);

/// Mean matrix for a batch: one init draw per column (independent streams).
std::vector<double> lifted_init_mean(const Graph& g, const InitConfig& cfg, int lift_dim,
                                     const RngStream& stream);

} // namespace liftcut
