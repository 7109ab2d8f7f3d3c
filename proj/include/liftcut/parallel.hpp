#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace liftcut {

/// Effective worker count: 0 means hardware concurrency.
inline unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(i) for i in [begin, end). Each index is processed exactly once and
/// writes only its own outputs, so results are identical for any worker count.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned workers, Fn&& fn) {
    const std::size_t count = end > begin ? end - begin : 0;
    if (count == 0) return;
    workers = resolve_workers(workers);
    if (workers <= 1 || count == 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const std::size_t n_threads = std::min<std::size_t>(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (std::size_t t = 0; t < n_threads; ++t) {
        // Static block partition.
        const std::size_t lo = begin + count * t / n_threads;
        const std::size_t hi = begin + count * (t + 1) / n_threads;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace liftcut
