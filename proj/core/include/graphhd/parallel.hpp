#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace graphhd {

// Resolve a user thread count: 0 means hardware concurrency, and we never
// spawn more workers than items.
inline unsigned resolve_threads(unsigned requested, std::size_t items) {
    unsigned t = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (t == 0) t = 1;
    if (items < t) t = items ? static_cast<unsigned>(items) : 1;
    return t;
}

// Run fn(chunk_index, begin, end) over contiguous chunks of [0, n).
// chunk_count == resolve_threads(threads, n). With one chunk the call is
// inline, no thread spawned. The first worker exception is rethrown.
inline void parallel_chunks(std::size_t n, unsigned threads,
                            const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
    const unsigned chunks = resolve_threads(threads, n);
    if (chunks <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t per = n / chunks;
    const std::size_t extra = n % chunks;
    std::size_t begin = 0;
    for (unsigned c = 0; c < chunks; ++c) {
        const std::size_t end = begin + per + (c < extra ? 1 : 0);
        workers.emplace_back([&, c, begin, end] {
            try {
                fn(c, begin, end);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace graphhd
