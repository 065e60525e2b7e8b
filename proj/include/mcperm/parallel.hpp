#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace mcperm {

// Static index partition across `jobs` threads. Each worker writes only to
// its own output slots, so results are identical for any job count; all
// arithmetic downstream is exact.
inline void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const size_t workers = std::min<size_t>(static_cast<size_t>(jobs), count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (size_t i = w; i < count; i += workers) body(i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace mcperm
