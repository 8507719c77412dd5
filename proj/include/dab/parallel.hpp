#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace dab {

/// Worker budget: DAB_THREADS if set (>= 1), hardware concurrency otherwise.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("DAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs body(i) for i in [0, n) across the thread budget, strided so the
/// work is spread evenly. Each index must write to its own slots only;
/// results are then independent of the thread count.
template <class F>
void parallel_for(std::size_t n, F&& body) {
    unsigned workers = thread_budget();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    for (auto& t : threads) t.join();
}

}  // namespace dab
