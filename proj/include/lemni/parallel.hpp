#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace lemni {

// Worker cap: LEMNIKIT_THREADS if set, else hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("LEMNIKIT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(job_index) for job_index in [0, n). Job order within a worker is
// ascending, so any per-job outputs written to preallocated slots are
// identical to a serial run.
template <class F>
void parallel_for(long long n, F f) {
    int workers = std::min<long long>(worker_count(), n);
    if (workers <= 1) {
        for (long long i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([=] {
            for (long long i = w; i < n; i += workers) f(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace lemni
