#pragma once

// Minimal deterministic worker pool: results are written by index and
// reduced by the caller in order, so the outcome does not depend on
// scheduling.

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace srs {

inline int default_jobs(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
    jobs = default_jobs(jobs);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = jobs < static_cast<int>(count) ? jobs : static_cast<int>(count);
    pool.reserve(spawn);
    for (int w = 0; w < spawn; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace srs
