#pragma once

#include <cstddef>
#include <span>
#include <thread>
#include <vector>

namespace zll {

// Evaluates fn(i) for i in [0, n) on `threads` workers and returns the
// results in index order.  The work split is by contiguous blocks whose
// boundaries depend only on n and threads; each slot is written exactly
// once, so the result (and any reduction done over it in index order) is
// independent of the worker count.
template <typename Fn>
auto parallel_map(std::size_t n, int threads, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(n);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::size_t nw = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        std::size_t lo = n * w / nw;
        std::size_t hi = n * (w + 1) / nw;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

// Index-ordered pairwise summation; deterministic for a given input order.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0;
        for (double x : v) s += x;
        return s;
    }
    std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace zll
