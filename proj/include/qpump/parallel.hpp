// parallel.hpp — minimal helpers for embarrassingly parallel parameter sweeps

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qpump::parallel {

// QPUMP_THREADS wins when set to a positive integer; otherwise the hardware
// concurrency, with 1 as the fallback when that is unknown.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("QPUMP_THREADS")) {
        char* end = nullptr;
        const unsigned long parsed = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && parsed >= 1 && parsed <= 512)
            return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// Runs fn(i) for i in [0, count). Work items must not share mutable state;
// callers get determinism by writing into disjoint slots of a results vector.
// The first exception thrown by any item is rethrown after all threads join.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const std::size_t pool = std::min<std::size_t>(threads, count);
    std::vector<std::thread> workers;
    workers.reserve(pool);
    for (std::size_t k = 0; k < pool; ++k) workers.emplace_back(worker);
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
}

}
