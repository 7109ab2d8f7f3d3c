#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liftcut/errors.hpp"

namespace liftcut {

/// Batch of B relaxation points, each an n x l matrix with entries in [-1, 1]
/// (l = 1 is the unlifted vector case). Columns are stored contiguously:
/// member j, column i occupies values[((j * l) + i) * n .. +n).
struct DenseState {
    std::int64_t nodes = 0;      // n
    int lift_dim = 1;            // l
    std::int64_t batch = 0;      // B
    std::vector<double> values;

    DenseState() = default;
    DenseState(std::int64_t n, int l, std::int64_t b)
        : nodes(n), lift_dim(l), batch(b),
          values(static_cast<std::size_t>(n) * static_cast<std::size_t>(l) *
                 static_cast<std::size_t>(b)) {
        if (n < 1 || l < 1 || b < 1)
            throw ValidationError("DenseState: n, l, B must all be >= 1");
    }

    std::span<double> column(std::int64_t member, int col) {
        return {values.data() + offset(member, col), static_cast<std::size_t>(nodes)};
    }
    std::span<const double> column(std::int64_t member, int col) const {
        return {values.data() + offset(member, col), static_cast<std::size_t>(nodes)};
    }

    std::span<double> member(std::int64_t j) {
        return {values.data() + offset(j, 0),
                static_cast<std::size_t>(nodes) * static_cast<std::size_t>(lift_dim)};
    }
    std::span<const double> member(std::int64_t j) const {
        return {values.data() + offset(j, 0),
                static_cast<std::size_t>(nodes) * static_cast<std::size_t>(lift_dim)};
    }

    bool same_shape(const DenseState& other) const {
        return nodes == other.nodes && lift_dim == other.lift_dim && batch == other.batch;
    }

private:
    std::size_t offset(std::int64_t member, int col) const {
        return (static_cast<std::size_t>(member) * static_cast<std::size_t>(lift_dim) +
                static_cast<std::size_t>(col)) *
               static_cast<std::size_t>(nodes);
    }
};

} // namespace liftcut
