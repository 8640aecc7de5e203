#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace cyclefactor::detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Splits [0, total) into one contiguous chunk per worker and runs
/// body(worker_index, lo, hi) on each. Results must be merged by the
/// caller in worker order; exact-integer accumulation makes the merged
/// result independent of the worker count.
template <typename Body>
void run_partitioned(std::uint64_t total, int threads, Body&& body) {
    threads = resolve_threads(threads);
    auto workers = static_cast<std::uint64_t>(threads);
    if (workers > total) workers = total == 0 ? 1 : total;
    if (workers <= 1) {
        body(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t lo = total * w / workers;
        std::uint64_t hi = total * (w + 1) / workers;
        pool.emplace_back([&body, w, lo, hi] { body(static_cast<int>(w), lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace cyclefactor::detail
