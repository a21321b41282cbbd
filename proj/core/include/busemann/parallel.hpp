#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace busemann {

/// Worker count used by parallel_for. Defaults to the BUSEMANN_THREADS
/// environment variable when set, otherwise the hardware concurrency.
unsigned thread_count() noexcept;
void set_thread_count(unsigned n) noexcept;

/// Calls body(begin, end) on disjoint contiguous chunks covering [0, n).
/// Chunk boundaries depend only on n and the worker count; the first
/// exception thrown by any chunk is rethrown on the calling thread. Calls made
/// from inside a worker run inline.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 16);

/// Pairwise (tree) summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> values) noexcept;

}  // namespace busemann
