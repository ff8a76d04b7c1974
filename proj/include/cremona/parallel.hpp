#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cremona {

/// Worker count: CREMONA_WORKERS when set (clamped to >= 1), otherwise the
/// available hardware parallelism.
unsigned worker_count();

/// Applies f to every index in [0, n) across worker_count() threads and
/// returns the results in index order, so callers stay deterministic no
/// matter the schedule. The first exception thrown by any worker is
/// rethrown.
template <typename R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& f) {
    std::vector<R> out(n);
    const unsigned workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers && w < n; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    out[i] = f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace cremona
