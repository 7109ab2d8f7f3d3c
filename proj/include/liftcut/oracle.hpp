#pragma once

#include <cstdint>
#include <vector>

#include "liftcut/dense_state.hpp"
#include "liftcut/graph.hpp"

namespace liftcut {

struct OracleResult {
    std::int64_t optimum = 0;
    std::vector<std::uint8_t> witness;
    std::int64_t count_optimal = 0;  // z and its complement counted separately
};

/// Exhaustive MaxCut over 2^(n-1) assignments (node 0 fixed by symmetry), with
/// Gray-code incremental cut updates. Ties resolved toward the assignment with
/// the smallest integer encoding, so the result is independent of how the scan
/// is partitioned across workers. Guarded to n <= 26.
OracleResult brute_force_maxcut(const Graph& g, unsigned workers = 1);

/// All X in {-1,1}^{n x l} whose rows are not all identical, i.e. the lifted
/// MaxCut fixed-point set. Verifies along the way that every listed matrix
/// survives one projected ascent step (alpha = 0.1) unchanged and that every
/// excluded matrix rounds to a zero-value cut. Guarded to n * l <= 20.
std::vector<DenseState> enumerate_lifted_fixed_points(const Graph& g, int lift_dim);

} // namespace liftcut
