#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <utility>
#include <vector>

namespace hypsum {

enum class ExecMode { serial, parallel };

// Applies fn(i) for i in [0, n) and returns the results in index order.
// The parallel path distributes iterations over OpenMP threads; every result
// lands in its own slot, so the output never depends on the schedule. An
// exception thrown by fn is captured and rethrown after the loop drains.
template <typename F>
auto map_indexed(std::size_t n, ExecMode mode, F&& fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(n);
  if (mode == ExecMode::parallel) {
    std::exception_ptr error;
    std::mutex error_mutex;
#ifdef _OPENMP
#pragma omp parallel for schedule(guided)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  }
  return out;
}

}  // namespace hypsum
