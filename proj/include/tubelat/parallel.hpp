#pragma once

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tubelat {

// Run f(i) for i in [0, count) on up to `jobs` threads, in contiguous blocks.
template <class F>
void parallel_for(std::size_t count, int jobs, F f) {
    std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * block, hi = std::min(count, lo + block);
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Smallest i in [0, count) with fails(i), scanning in parallel.
template <class F>
std::optional<std::size_t> first_failure(std::size_t count, int jobs, F fails) {
    std::mutex mu;
    std::optional<std::size_t> first;
    parallel_for(count, jobs, [&](std::size_t i) {
        {
            std::lock_guard lock(mu);
            if (first && *first < i) return;
        }
        if (!fails(i)) return;
        std::lock_guard lock(mu);
        if (!first || i < *first) first = i;
    });
    return first;
}

} // namespace tubelat
