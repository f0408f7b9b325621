#pragma once

#include <cstdint>
#include <functional>

namespace entmono {

// Parallelism cap: ENTMONO_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1). Malformed values are ignored.
int thread_budget();

// Splits [0, count) into contiguous chunks and runs body(begin, end) on up
// to thread_budget() threads. The chunks partition the range, so any body
// writing to disjoint slots is deterministic regardless of scheduling.
void parallel_chunks(std::uint64_t count,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body);

}  // namespace entmono
