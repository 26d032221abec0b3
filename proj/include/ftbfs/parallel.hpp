#pragma once

#include <thread>
#include <utility>
#include <vector>

namespace ftbfs {

// Static contiguous split of [begin,end) into at most `threads` nonempty
// chunks. Work distribution is a pure function of the inputs, never of
// scheduling, which is what keeps parallel output byte-identical to
// sequential output when results are reduced in chunk order.
inline std::vector<std::pair<int, int>> chunk_ranges(int begin, int end, int threads) {
    std::vector<std::pair<int, int>> out;
    const int total = end - begin;
    if (total <= 0) return out;
    const int chunks = std::max(1, std::min(threads, total));
    const int base = total / chunks;
    const int extra = total % chunks;
    int at = begin;
    for (int c = 0; c < chunks; ++c) {
        const int len = base + (c < extra ? 1 : 0);
        out.emplace_back(at, at + len);
        at += len;
    }
    return out;
}

// Runs worker(chunk_index, chunk_begin, chunk_end) over the static split,
// one thread per chunk (inline when a single chunk suffices).
template <typename Worker>
inline void run_chunked(int begin, int end, int threads, Worker&& worker) {
    const auto ranges = chunk_ranges(begin, end, threads);
    if (ranges.size() <= 1) {
        for (std::size_t c = 0; c < ranges.size(); ++c)
            worker(static_cast<int>(c), ranges[c].first, ranges[c].second);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t c = 0; c < ranges.size(); ++c)
        pool.emplace_back([&worker, c, &ranges] {
            worker(static_cast<int>(c), ranges[c].first, ranges[c].second);
        });
    for (auto& t : pool) t.join();
}

}  // namespace ftbfs
