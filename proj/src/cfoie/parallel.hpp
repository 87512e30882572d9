#pragma once

#include <cstdint>
#include <functional>

namespace cfoie {

// Global worker count used by assembly and target-evaluation loops.
// 0 selects std::thread::hardware_concurrency().
void set_thread_count(int n);
int thread_count();

// Runs fn(begin, end) on disjoint index chunks of [0, n) across the
// configured number of workers. Falls back to a direct call when n is
// small or a single worker is configured.
void parallel_for_chunks(std::int64_t n,
                         const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace cfoie
