#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace mp {

// Index-sharded parallel loop; results must be written to per-index slots so
// the outcome is independent of scheduling.
inline void parallel_for(size_t count, int workers, const std::function<void(size_t)>& fn) {
    if (workers <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            for (size_t i = static_cast<size_t>(w); i < count; i += workers) fn(i);
        });
    for (auto& t : threads) t.join();
}

}  // namespace mp
