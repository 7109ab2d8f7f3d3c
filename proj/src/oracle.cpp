#include "liftcut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "liftcut/objectives.hpp"
#include "liftcut/parallel.hpp"

namespace liftcut {

namespace {

// Assignment encoding: bit v of the integer is z_v. Node 0 is fixed to side 0
// during the scan, so the code c enumerates nodes 1..n-1 and int(z) = gray(c) << 1.
struct ChunkBest {
    std::int64_t cut = -1;
    std::int64_t count = 0;
    std::uint64_t min_encoding = ~0ULL;
};

std::int64_t cut_of_encoding(const Graph& g, std::uint64_t enc) {
    std::int64_t cut = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const std::uint64_t zu = (enc >> u) & 1u;
        for (NodeId v : g.neighbors(u))
            if (u < v && zu != ((enc >> v) & 1u)) ++cut;
    }
    return cut;
}

void consider(ChunkBest& best, const Graph& g, std::int64_t cut, std::uint64_t enc) {
    if (cut < best.cut) return;
    const std::uint64_t full = g.node_count() >= 64
                                   ? ~0ULL
                                   : ((1ULL << g.node_count()) - 1);
    const std::uint64_t candidate = std::min(enc, full ^ enc);
    if (cut > best.cut) {
        best.cut = cut;
        best.count = 2;  // z and its complement
        best.min_encoding = candidate;
    } else {
        best.count += 2;
        best.min_encoding = std::min(best.min_encoding, candidate);
    }
}

} // namespace

OracleResult brute_force_maxcut(const Graph& g, unsigned workers) {
    const NodeId n = g.node_count();
    if (n > 26)
        throw ValidationError("brute_force_maxcut: n = " + std::to_string(n) +
                              " exceeds the exhaustive-scan guard (26)");

    const std::uint64_t total = n >= 1 ? (1ULL << (n - 1)) : 1;
    const unsigned eff_workers = resolve_workers(workers);
    const std::size_t n_chunks =
        total < 1024 ? 1 : std::min<std::uint64_t>(total, eff_workers * 8ULL);
    std::vector<ChunkBest> results(n_chunks);

    parallel_for(0, n_chunks, workers, [&](std::size_t chunk) {
        const std::uint64_t lo = total * chunk / n_chunks;
        const std::uint64_t hi = total * (chunk + 1) / n_chunks;
        std::uint64_t enc = (lo ^ (lo >> 1)) << 1;  // gray(lo) over nodes 1..n-1
        std::int64_t cut = cut_of_encoding(g, enc);
        ChunkBest best;
        consider(best, g, cut, enc);
        for (std::uint64_t c = lo + 1; c < hi; ++c) {
            const NodeId flipped = static_cast<NodeId>(std::countr_zero(c) + 1);
            const std::uint64_t z_flipped = (enc >> flipped) & 1u;
            std::int64_t crossing = 0;
            for (NodeId u : g.neighbors(flipped))
                if (((enc >> u) & 1u) != z_flipped) ++crossing;
            cut += g.degree(flipped) - 2 * crossing;
            enc ^= 1ULL << flipped;
            consider(best, g, cut, enc);
        }
        results[chunk] = best;
    });

    ChunkBest merged;
    for (const ChunkBest& b : results) {
        if (b.cut > merged.cut) {
            merged = b;
        } else if (b.cut == merged.cut) {
            merged.count += b.count;
            merged.min_encoding = std::min(merged.min_encoding, b.min_encoding);
        }
    }

    OracleResult result;
    result.optimum = merged.cut;
    result.count_optimal = merged.count;
    result.witness.resize(n);
    for (NodeId v = 0; v < n; ++v)
        result.witness[v] = static_cast<std::uint8_t>((merged.min_encoding >> v) & 1u);
    return result;
}

std::vector<DenseState> enumerate_lifted_fixed_points(const Graph& g, int lift_dim) {
    const NodeId n = g.node_count();
    if (lift_dim < 1) throw ValidationError("enumerate_lifted_fixed_points: l must be >= 1");
    const std::int64_t bits = static_cast<std::int64_t>(n) * lift_dim;
    if (bits > 20)
        throw ValidationError("enumerate_lifted_fixed_points: n * l = " + std::to_string(bits) +
                              " exceeds the enumeration guard (20)");

    std::vector<DenseState> fixed_points;
    const std::uint64_t total = 1ULL << bits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        DenseState state(n, lift_dim, 1);
        for (std::int64_t k = 0; k < bits; ++k)
            state.values[static_cast<std::size_t>(k)] = (mask >> k) & 1u ? 1.0 : -1.0;

        bool rows_identical = true;
        for (NodeId v = 1; v < n && rows_identical; ++v)
            for (int i = 0; i < lift_dim; ++i)
                if (state.column(0, i)[v] != state.column(0, i)[0]) {
                    rows_identical = false;
                    break;
                }

        if (rows_identical) {
            if (cut_value(g, round_lifted(state)) != 0)
                throw Error("excluded lifted matrix rounds to a nonzero cut");
            continue;
        }

        // One projected ascent step at alpha = 0.1 must hold the point.
        DenseState stepped = state;
        std::vector<double> direction(state.values.size());
        ascent_direction_lifted(g, state, 0, direction);
        for (std::size_t k = 0; k < stepped.values.size(); ++k)
            stepped.values[k] += 0.1 * direction[k];
        project_box(stepped);
        if (stepped.values != state.values)
            throw Error("lifted fixed-point candidate moved under a projected ascent step");
        fixed_points.push_back(std::move(state));
    }
    return fixed_points;
}

} // namespace liftcut
