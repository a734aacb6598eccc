#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace esa {

/// Runs f(0..count-1) in batches of hardware_concurrency tasks; results keep
/// index order.
template <typename F>
auto parallel_map(std::size_t count, F f) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<R> out;
    out.reserve(count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
        return out;
    }
    for (std::size_t start = 0; start < count; start += workers) {
        std::vector<std::future<R>> batch;
        for (std::size_t i = start; i < std::min(count, start + workers); ++i)
            batch.push_back(std::async(std::launch::async, f, i));
        for (auto& fut : batch) out.push_back(fut.get());
    }
    return out;
}

}  // namespace esa
