#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace nt {

// NT_THREADS caps the worker pool; sweeps stay deterministic because results
// are merged in chunk order, not completion order.
inline int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("NT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < 1024) return static_cast<int>(std::min<unsigned>(static_cast<unsigned>(v), hw * 4));
    }
    return static_cast<int>(hw);
}

// Runs f(chunk) for chunk = 0..nchunks-1 on the pool.  f must only touch its
// own chunk's state.
template <class Fn>
void parallel_chunks(long nchunks, Fn&& f) {
    int nthreads = thread_budget();
    if (nthreads <= 1 || nchunks <= 1) {
        for (long i = 0; i < nchunks; ++i) f(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    int use = static_cast<int>(std::min<long>(nthreads, nchunks));
    std::exception_ptr err = nullptr;
    std::mutex err_mu;
    for (int t = 0; t < use; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= nchunks) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace nt
