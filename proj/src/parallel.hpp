#pragma once

#include <exception>
#include <mutex>

namespace homkit::detail {

// Runs body(i) for i in [0, n) on the OpenMP team. The first exception
// thrown by any iteration is rethrown after the loop.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr error;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace homkit::detail
