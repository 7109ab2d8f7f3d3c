#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "liftcut/dense_state.hpp"
#include "liftcut/graph.hpp"

namespace liftcut {

struct AscentParams {
    double alpha = 0.05;       // step size
    std::int64_t iterations = 500;
    double momentum = 0.9;     // mu in [0, 1); 0 recovers plain projected ascent
    bool early_exit = true;

    void validate() const;
};

/// Optional per-iteration hook: (iteration, member, objective after the step).
/// Evaluating the objective per step is costly; leave unset outside bench runs.
using TraceCallback = std::function<void(std::int64_t, std::int64_t, double)>;

/// Per-member flag: max-abs entry change between prev and next is <= tol.
std::vector<bool> detect_fixed_point(const DenseState& prev, const DenseState& next, double tol);

/// Batched heavy-ball projected gradient ascent, run independently per member:
///   v <- mu * v + LX;  X <- Proj[-1,1](X + alpha * v),  v starting at zero.
/// The velocity is not projected. Members are embarrassingly parallel and the
/// result is identical for any worker count. Throws NumericError naming the
/// iteration and member if a non-finite value appears.
void ascend(const Graph& g, DenseState& state, const AscentParams& params,
            unsigned workers = 1, const TraceCallback& trace = nullptr);

} // namespace liftcut
