#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace strot::parallel {

inline std::atomic<unsigned>& max_threads_storage() {
    static std::atomic<unsigned> n{std::thread::hardware_concurrency() > 0
                                       ? std::thread::hardware_concurrency()
                                       : 1u};
    return n;
}

inline unsigned max_threads() { return max_threads_storage().load(); }

inline void set_max_threads(unsigned n) { max_threads_storage().store(n == 0 ? 1u : n); }

inline bool& in_parallel_region() {
    thread_local bool inside = false;
    return inside;
}

/// Runs fn(i) for i in [0, n). Work items must write to disjoint state;
/// reductions belong to the caller (iterate results in index order so the
/// outcome is independent of the thread count). Nested calls run serially.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned nthreads = max_threads();
    if (n == 0) return;
    if (nthreads <= 1 || n == 1 || in_parallel_region()) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(nthreads, n));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            in_parallel_region() = true;
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) break;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace strot::parallel
