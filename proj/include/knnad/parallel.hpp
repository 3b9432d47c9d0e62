#pragma once

#include <cstdint>
#include <functional>

namespace knnad {

/// Worker-thread cap shared by all parallel loops. n <= 0 restores the
/// hardware default.
void set_max_threads(int n);
int max_threads();

/// Runs fn(begin, end) over a static partition of [0, n). Each index is
/// visited exactly once and chunks never overlap, so results written
/// per-index are identical for any thread count.
void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace knnad
