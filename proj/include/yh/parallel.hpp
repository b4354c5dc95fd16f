#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace yh {

// Worker count: YH_THREADS if set to a positive integer, else the hardware
// concurrency. Results never depend on this, only wall time does.
inline int thread_budget() {
    if (const char* env = std::getenv("YH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs work(0..count-1) across the thread budget. Callers keep output
// deterministic by writing to preallocated, index-addressed slots. The first
// exception thrown by any worker is rethrown here.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& work) {
    std::size_t threads = static_cast<std::size_t>(thread_budget());
    if (threads > count) threads = count;
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> hold(failure_lock);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace yh
