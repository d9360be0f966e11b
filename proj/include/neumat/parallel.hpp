// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace neumat {

/// Worker cap: NEUMAT_THREADS when set, hardware concurrency otherwise.
int max_threads();

/// Runs fn(begin, end) over disjoint chunks of [0, n), possibly on several
/// threads. Chunk boundaries depend only on n and the thread cap, so any
/// deterministic per-chunk work gives run-to-run identical results.
template <typename Fn>
void parallel_chunks(int64_t n, Fn&& fn) {
    if (n <= 0) return;
    int workers = max_threads();
    if (workers < 1) workers = 1;
    if (static_cast<int64_t>(workers) > n) workers = static_cast<int>(n);
    if (workers == 1) {
        fn(int64_t{0}, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    int64_t chunk = (n + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        int64_t begin = t * chunk;
        int64_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : threads) th.join();
}

}  // namespace neumat
