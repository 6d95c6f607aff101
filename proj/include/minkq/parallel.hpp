#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace minkq {

// Global worker count for data-parallel maps. Results never depend on it:
// work is split into chunks of a fixed shape and merged in chunk order.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size chunks.
// Chunk boundaries depend only on (n, chunk). Threads pick chunks dynamically;
// each chunk writes only its own slot, so callers merge deterministically.
void parallel_chunks(std::size_t n, std::size_t chunk,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

// Fixed-shape balanced pairwise reduction: repeatedly combines items[i] and
// items[i+stride] in index order. Deterministic for any addition order-
// sensitive type. Combine is op(accumulate_into, from).
template <typename T, typename Op>
void pairwise_reduce_inplace(std::vector<T>& items, Op op) {
    for (std::size_t stride = 1; stride < items.size(); stride *= 2)
        for (std::size_t i = 0; i + stride < items.size(); i += 2 * stride)
            op(items[i], items[i + stride]);
}

} // namespace minkq
