#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace respdeg
{

/// Calls `body(i)` for every i in [0, n) on up to `threads` workers. The first
/// exception thrown by any call is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body)
{
    const auto workers = static_cast<std::size_t>(std::max(1U, threads));
    if (workers == 1 || n < 2)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{ 0 };
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < std::min(workers, n); ++w)
            pool.emplace_back([&] {
                for (auto i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                {
                    try
                    {
                        body(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock{ error_mutex };
                        if (!error)
                            error = std::current_exception();
                        next.store(n);
                    }
                }
            });
    }
    if (error)
        std::rethrow_exception(error);
}

inline unsigned default_thread_count()
{
    return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace respdeg
