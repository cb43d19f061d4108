#pragma once

// Node loops run either on the OpenMP team or serially. The serial path is
// the reference the parallel kernels are tested against: both call the same
// per-node body, so results must match bit for bit.

#include <cstddef>
#include <exception>

namespace mvt {

enum class Exec { serial, parallel };

/// Calls body(k) for k in [0, n). If any call throws, the exception of the
/// lowest failing k is rethrown, independent of scheduling.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::size_t first = n;
  std::exception_ptr error;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < count; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(mvt_first_error)
      {
        if (static_cast<std::size_t>(k) < first) {
          first = static_cast<std::size_t>(k);
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace mvt
