#ifndef CLIFFT_PARALLEL_HPP
#define CLIFFT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace clifft {

/// Chunked parallel loop over [0, n). Work is split into fixed-size chunks
/// claimed atomically; results must be written to per-index slots so the
/// outcome is independent of the thread schedule.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                         std::size_t chunk = 256) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n <= chunk) {
        body(0, n);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            body(begin, std::min(begin + chunk, n));
        }
    };
    std::vector<std::thread> pool;
    unsigned nt = std::min<unsigned>(hw, 16);
    pool.reserve(nt);
    for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace clifft

#endif
