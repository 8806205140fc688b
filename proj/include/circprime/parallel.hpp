#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace circprime {

/// Splits [0, count) into contiguous chunks, runs fn(begin, end) on up to
/// `threads` workers and returns the per-chunk results in index order, so the
/// concatenation is independent of the thread count. threads == 0 means
/// hardware concurrency.
template <class Fn>
auto parallel_chunks(std::size_t count, unsigned threads, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))>
{
    using Result = decltype(fn(std::size_t{}, std::size_t{}));
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
    std::vector<Result> results(workers);
    if (workers == 1) {
        results[0] = fn(0, count);
        return results;
    }

    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(count, w * chunk);
            const std::size_t end = std::min(count, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try {
                    results[w] = fn(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

} // namespace circprime
