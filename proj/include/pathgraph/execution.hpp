#pragma once

#include <cstdint>
#include <exception>
#include <utility>

namespace pathgraph {

// Selects between the OpenMP kernel and the serial reference loop. Both
// produce identical results; Serial exists for testing and benchmarking.
enum class Policy { Serial, Parallel };

/// Runs fn(i) for i in [0, count). Under Policy::Parallel the iterations are
/// spread over OpenMP threads. If iterations throw, the exception from the
/// lowest failing index is rethrown after the loop, matching the serial path.
template <class Fn>
void for_each_index(Policy policy, std::int64_t count, Fn&& fn) {
  if (policy == Policy::Serial) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::int64_t failed_at = count;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(pathgraph_failure)
      if (i < failed_at) {
        failed_at = i;
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace pathgraph
