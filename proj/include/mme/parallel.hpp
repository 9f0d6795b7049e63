#ifndef MME_PARALLEL_HPP
#define MME_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace mme {

/// Worker cap: MME_THREADS env var, 0 or unset = hardware concurrency.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("MME_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return (unsigned)v;
    }
    return hw;
}

/// Fork-join loop over [0, n). Results must be written to disjoint slots so
/// the outcome is identical for every schedule and thread count.
inline void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    unsigned workers = thread_budget();
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    if (workers > n) workers = (unsigned)n;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace mme

#endif
