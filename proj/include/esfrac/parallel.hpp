#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace esfrac {

// Worker count: ESFRAC_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
inline unsigned worker_count() {
    if (const char* env = std::getenv("ESFRAC_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(i) for every i in [0, count). Work is handed out in contiguous
// chunks; fn must only write to per-index state so results do not depend on
// scheduling. The first exception thrown by a worker is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, std::size_t chunk, Fn&& fn) {
    if (chunk == 0) chunk = 1;
    if (threads <= 1 || count <= chunk) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(chunk);
            if (begin >= count) return;
            const std::size_t end = std::min(count, begin + chunk);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, (count + chunk - 1) / chunk));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace esfrac
