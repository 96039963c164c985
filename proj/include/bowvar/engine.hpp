#pragma once

#include <cstddef>
#include <exception>

namespace bowvar {

// Bulk kernels (per-fixed-point weight and curve computations) run either on a
// single thread or across OpenMP threads.  Results are written into
// preallocated per-index slots, so both policies produce byte-identical
// output; Serial is the reference the parallel path is tested against.
enum class ExecutionPolicy { Serial, Parallel };

namespace detail {

template <typename Fn>
void for_each_index_serial(std::size_t count, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

template <typename Fn>
void for_each_index_parallel(std::size_t count, Fn&& fn) {
#if defined(BOWVAR_HAVE_OPENMP)
  std::exception_ptr error;
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
#else
  for_each_index_serial(count, fn);
#endif
}

}  // namespace detail

template <typename Fn>
void for_each_index(ExecutionPolicy policy, std::size_t count, Fn&& fn) {
  if (policy == ExecutionPolicy::Parallel) {
    detail::for_each_index_parallel(count, fn);
  } else {
    detail::for_each_index_serial(count, fn);
  }
}

}  // namespace bowvar
