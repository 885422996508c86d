#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace chom {

/// Parallel map over an index grid. Tasks must only read shared state and
/// write to their own slot. jobs <= 1 runs inline.
template <typename F>
void parallel_for(int jobs, int count, F&& f) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
    };
    std::vector<std::thread> pool;
    int n = std::min(jobs, count);
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline int default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace chom
