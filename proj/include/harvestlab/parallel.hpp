#ifndef HARVESTLAB_PARALLEL_HPP
#define HARVESTLAB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace harvestlab {

// Worker count: explicit request, else HARVESTLAB_THREADS, else hardware
// concurrency (0 means auto at every level).
inline unsigned resolve_threads(unsigned requested)
{
    long n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("HARVESTLAB_THREADS"))
            n = std::strtol(env, nullptr, 10);
    }
    if (n <= 0)
        n = long(std::thread::hardware_concurrency());
    if (n <= 0)
        n = 1;
    return unsigned(n);
}

// Order-preserving parallel map: the body writes results by index, so the
// output layout never depends on scheduling.  The first exception thrown by
// any worker is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body)
{
    threads = resolve_threads(threads);
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::size_t n_workers = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    for (std::size_t t = 0; t < n_workers; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += n_workers) {
                    if (failed.load(std::memory_order_relaxed))
                        return;
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true))
                    error = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace harvestlab

#endif
