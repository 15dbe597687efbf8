#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace rf::detail {

inline int clamp_workers(int workers, std::int64_t tasks)
{
    if (workers < 1)
        workers = 1;
    return static_cast<int>(std::min<std::int64_t>(workers, std::max<std::int64_t>(tasks, 1)));
}

// Runs fn(i) for every i in [0, count).
template <class Fn>
void parallel_for(std::int64_t count, int workers, Fn && fn)
{
    workers = clamp_workers(workers, count);
    if (workers == 1) {
        for (std::int64_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::int64_t i; (i = next.fetch_add(1)) < count;)
                fn(i);
        });
}

// Lowest i in [0, count) with fn(i, cancelled) == true, or -1. fn may poll cancelled()
// and give up once a lower index has succeeded. The answer does not depend on workers.
template <class Fn>
std::int64_t parallel_first(std::int64_t count, int workers, Fn && fn)
{
    workers = clamp_workers(workers, count);
    std::atomic<std::int64_t> best{count};
    std::atomic<std::int64_t> next{0};
    auto work = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= count || i > best.load(std::memory_order_relaxed))
                return;
            auto cancelled = [&best, i] { return best.load(std::memory_order_relaxed) < i; };
            if (fn(i, cancelled)) {
                std::int64_t cur = best.load();
                while (i < cur && ! best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    if (workers == 1)
        work();
    else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    std::int64_t b = best.load();
    return b == count ? -1 : b;
}

} // namespace rf::detail
