#pragma once

// Chunked parallel-for over an index range. Worker count is capped by the
// EXTLAB_THREADS environment variable (default: hardware concurrency).
// Chunks are contiguous and disjoint, so writers never overlap and results
// are independent of the thread schedule.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace extlab {

inline int worker_count() {
    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("EXTLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

// fn(begin, end) is called on disjoint [begin, end) subranges covering [0, n).
inline void parallel_for(long n, const std::function<void(long, long)>& fn) {
    int workers = std::min<long>(worker_count(), std::max<long>(n, 1));
    if (workers <= 1 || n < 2) {
        if (n > 0) fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long lo = w * chunk;
        long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace extlab
