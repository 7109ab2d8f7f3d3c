#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace liftcut {

// Counter-based random stream built on the splitmix64 finalizer. Every draw is a
// pure function of (key, counter), so streams can be split per batch/member/node
// and replayed independently of thread scheduling.
namespace rng_detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t combine(std::uint64_t key, std::uint64_t word) {
    return mix64(key ^ (word + 0x9e3779b97f4a7c15ULL + (key << 6) + (key >> 2)));
}

} // namespace rng_detail

class RngStream {
public:
    explicit RngStream(std::uint64_t key) : key_(key) {}

    /// Stream for a sub-task; same path -> same stream, regardless of caller order.
    RngStream split(std::initializer_list<std::uint64_t> path) const {
        std::uint64_t k = key_;
        for (std::uint64_t w : path) k = rng_detail::combine(k, w);
        return RngStream(k);
    }

    std::uint64_t next_u64() { return at(counter_++); }

    /// Draw indexed directly by counter; does not advance the stream.
    std::uint64_t at(std::uint64_t counter) const {
        return rng_detail::mix64(key_ ^ (counter * 0xd6e8feb86659fd93ULL));
    }

    /// Uniform in [0, 1).
    double next_unit() { return to_unit(next_u64()); }

    double unit_at(std::uint64_t counter) const { return to_unit(at(counter)); }

    /// Uniform in [lo, hi].
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Uniform over {lo, lo+1, ..., hi}.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    /// Standard normal via Box-Muller; consumes two uniforms per draw.
    double next_normal() {
        double u1 = next_unit();
        const double u2 = next_unit();
        if (u1 <= 0.0) u1 = 0x1p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform over {-1, +1}.
    double next_sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

    std::uint64_t key() const { return key_; }

private:
    static double to_unit(std::uint64_t bits) {
        return static_cast<double>(bits >> 11) * 0x1p-53;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace liftcut
