#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace cgadget {

/// Splits [0, total) into fixed per-thread chunks and runs fn(chunk_index,
/// begin, end) on each. Chunk boundaries depend only on (total, threads), so
/// callers that merge per-chunk results in chunk order stay deterministic.
template <class F>
void parallel_chunks(std::size_t total, unsigned threads, F&& fn) {
    if (threads <= 1 || total < 2048) {
        fn(0, std::size_t(0), total);
        return;
    }
    const std::size_t nchunks = threads;
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    for (std::size_t c = 0; c < nchunks; ++c) {
        const std::size_t begin = total * c / nchunks;
        const std::size_t end = total * (c + 1) / nchunks;
        pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    }
    for (auto& t : pool) t.join();
}

inline unsigned default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

} // namespace cgadget
