#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "dfilab/caps.hpp"

namespace dfilab {

/// Runs body(k) for k in [0, count), serially or as an OpenMP loop with
/// dynamic scheduling. Exceptions cannot cross the OpenMP region, so each
/// is captured and the one from the lowest index is rethrown afterwards.
template <class Body>
void for_each_index(std::size_t count, Exec exec, Body&& body) {
  if (exec == Exec::Serial) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace dfilab
