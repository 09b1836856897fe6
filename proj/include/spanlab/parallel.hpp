#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace spanlab {

// Runs fn(i) for i in [0, count). Work is pulled atomically so results land in
// caller-owned slots; no shared mutable state beyond the counter.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || count < 2) {
        for (size_t i = 0; i < count; i++) fn(i);
        return;
    }
    unsigned workers = std::min<size_t>(hw, count);
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; t++) {
        threads.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : threads) th.join();
}

}  // namespace spanlab
