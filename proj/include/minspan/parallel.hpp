#ifndef MINSPAN_PARALLEL_HPP
#define MINSPAN_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minspan {

enum class Execution { Serial, Parallel };

/// Worker cap: MINSPAN_THREADS when set to a positive integer, else the
/// OpenMP default (1 without OpenMP).
int worker_count();

/// Runs fn(i) for i in [0, n). Callers write results by index, so output
/// never depends on scheduling. If any call throws, the exception of the
/// lowest failing index is rethrown, matching the serial path.
template <class Fn>
void for_each_index(std::size_t n, Execution execution, Fn&& fn) {
  const int workers = execution == Execution::Parallel ? worker_count() : 1;
  if (workers < 2 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
  std::vector<std::exception_ptr> errors(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
#else
  for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace minspan

#endif
