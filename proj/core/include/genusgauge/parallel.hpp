#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "genusgauge/verify.hpp"

namespace gg {

// Evaluate fn(0), ..., fn(chunks-1) across a worker pool and merge the
// reports in index order. The merged result is therefore identical for any
// worker count. The first exception thrown by a chunk is re-thrown here
// after the pool drains.
inline verify::Report run_chunked(std::int64_t chunks, int workers,
                                  const std::function<verify::Report(std::int64_t)>& fn) {
    verify::Report total;
    if (chunks <= 0) return total;
    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw ? static_cast<int>(hw) : 4;
    }
    workers = static_cast<int>(std::min<std::int64_t>(workers, chunks));

    std::vector<verify::Report> results(static_cast<std::size_t>(chunks));
    std::atomic<std::int64_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;

    auto body = [&]() {
        while (true) {
            std::int64_t idx = next.fetch_add(1, std::memory_order_relaxed);
            if (idx >= chunks) return;
            try {
                results[static_cast<std::size_t>(idx)] = fn(idx);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };

    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);
    for (const auto& r : results) total.merge(r);
    return total;
}

} // namespace gg
