// Copyright 2026 The braidtrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace braidtrace {

/// Worker cap: BRAIDTRACE_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
inline int max_threads() {
    if (const char* env = std::getenv("BRAIDTRACE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

/// Runs fn(i) for i in [0, count) on contiguous chunks across workers. Each
/// index is visited exactly once; results must be written to caller-owned
/// per-index slots so reductions stay independent of the thread layout.
template <class Fn>
void parallel_for(int64_t count, Fn&& fn) {
    const int workers = std::min<int64_t>(max_threads(), std::max<int64_t>(count, 1));
    if (workers <= 1 || count < 2) {
        for (int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    const int64_t chunk = (count + workers - 1) / workers;
    for (int w = 1; w < workers; ++w) {
        int64_t lo = w * chunk, hi = std::min<int64_t>(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (int64_t i = 0; i < std::min<int64_t>(chunk, count); ++i) fn(i);
    for (auto& t : pool) t.join();
}

}  // namespace braidtrace
