#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace llab {

/// Execution policy for the data-parallel kernels. Every parallel kernel in
/// the library keeps a serial path with identical results; tests compare them.
enum class Exec { Serial, Parallel };

/// Calls fn(i) for i in [0, count). Exceptions thrown by fn are captured per
/// index and the one with the smallest index is rethrown after the loop, so
/// both policies report the same failure.
template <class Fn>
void for_each_index(std::size_t count, Fn&& fn, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Maps fn over [0, count) into a vector ordered by index.
template <class T, class Fn>
std::vector<T> map_index(std::size_t count, Fn&& fn, Exec exec = Exec::Parallel) {
  std::vector<T> out(count);
  for_each_index(count, [&](std::size_t i) { out[i] = fn(i); }, exec);
  return out;
}

}  // namespace llab
