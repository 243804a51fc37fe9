#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace varlingam {

/// Runs fn(begin, end) over [0, count) split into contiguous static chunks,
/// one per worker. Callers may only write to slots owned by their index range,
/// so the result is identical for every thread count.
inline void parallel_for(std::int64_t count, int threads,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (count <= 0) return;
    auto workers = static_cast<int>(std::min<std::int64_t>(std::max(1, threads), count));
    if (workers == 1) {
        fn(0, count);
        return;
    }
    const std::int64_t chunk = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers), nullptr);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, &errors, w, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    try {
        fn(0, std::min(count, chunk));
    } catch (...) {
        errors[0] = std::current_exception();
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace varlingam
