/*
   Copyright 2026 The ffiwa authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFIWA_PARALLEL_HPP
#define FFIWA_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ffiwa {

/// Thread count: FFIWA_THREADS if set, else hardware concurrency (capped).
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("FFIWA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min(hw, 8u) : 1u;
}

/// Evaluates f(0..n-1) with a fixed block partition and returns the results
/// in index order.  The output is independent of the thread count; threads
/// only change who computes what.
template <class T, class F>
std::vector<T> parallel_map(size_t n, F&& f, unsigned threads = 0) {
    if (threads == 0) threads = default_thread_count();
    std::vector<T> out(n);
    if (n == 0) return out;
    if (threads <= 1 || n == 1) {
        for (size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    threads = unsigned(std::min<size_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            for (size_t i = t; i < n; i += threads) out[i] = f(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace ffiwa

#endif
