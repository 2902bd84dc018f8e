#ifndef DISCHARGEKIT_PARALLEL_HPP
#define DISCHARGEKIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace dischargekit {

/// Worker count: `requested` if positive, else DISCHARGEKIT_THREADS, else
/// the hardware concurrency. DISCHARGEKIT_THREADS also caps any request.
inline int worker_count(int requested = 0)
{
    int cap = 0;
    if (const char* env = std::getenv("DISCHARGEKIT_THREADS")) {
        try {
            cap = std::stoi(env);
        } catch (const std::exception&) {
            cap = 0;
        }
    }
    int n = requested > 0 ? requested : (cap > 0 ? cap : static_cast<int>(std::thread::hardware_concurrency()));
    if (cap > 0)
        n = std::min(n, cap);
    return std::max(n, 1);
}

/// Runs body(i) for i in [0, count), handing indices out in increasing
/// order. The first exception thrown by any worker is rethrown.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body)
{
    const auto workers = static_cast<std::size_t>(std::min<std::size_t>(count, static_cast<std::size_t>(worker_count(threads))));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace dischargekit

#endif // DISCHARGEKIT_PARALLEL_HPP
