#pragma once

#include <cstddef>
#include <functional>

namespace qcs {

/// Process-wide worker count for parallel loops (default: hardware threads).
/// Results never depend on it: parallel loops write into disjoint slots and
/// all reductions happen afterwards in index order.
void set_thread_count(int n);
int thread_count();

/// Runs fn(i) for i in [0, n).  Splits the range into contiguous blocks, one
/// per worker.  fn must only touch state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qcs
