#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace frolov {

// Worker cap: FROLOV_THREADS env var, where 0 or unset means auto.
inline int thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("FROLOV_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(std::min<long>(v, 256));
    }
    return static_cast<int>(hw);
}

// Runs fn(begin, end) over a partition of [0, n) into one contiguous slice
// per worker. Callers must make slices independent; puts results into
// per-index slots or per-slice buffers that are later combined in slice
// order, so the outcome does not depend on the worker count.
template <class Fn>
void parallel_slices(long long n, int workers, Fn&& fn) {
    if (n <= 0) return;
    workers = static_cast<int>(std::max<long long>(1, std::min<long long>(workers, n)));
    if (workers == 1) {
        fn(0, static_cast<long long>(n), 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    long long base = n / workers, rem = n % workers, begin = 0;
    for (int w = 0; w < workers; ++w) {
        long long len = base + (w < rem ? 1 : 0);
        long long end = begin + len;
        pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

} // namespace frolov
