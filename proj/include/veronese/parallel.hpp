#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace veronese {

/// Run fn(i) for i in [0, count) on up to `threads` workers with static
/// chunking. Results must be written to per-index slots by the caller, so the
/// outcome is independent of scheduling. The first exception wins and is
/// rethrown after all workers join.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> workers;
    std::mutex err_mutex;
    std::exception_ptr first_error;
    for (std::size_t w = 0; w < nw; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += nw) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace veronese
