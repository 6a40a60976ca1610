#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "gwh/rational.hpp"

namespace gwh {

/// Kernels come in a serial reference form and an OpenMP form; both must
/// produce identical results.
enum class Execution { serial, parallel };

int thread_count();
void set_thread_count(int n);

/// out[i] = fn(i) for i < n. Exceptions thrown by fn are rethrown on the
/// calling thread.
template <class T, class Fn>
std::vector<T> indexed_map(std::size_t n, Fn&& fn, Execution ex) {
  std::vector<T> out(n);
  if (ex == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(gwh_indexed_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Sum of fn(i) for i < n, accumulated in index order.
template <class Fn>
Rational exact_sum(std::size_t n, Fn&& fn, Execution ex) {
  auto terms = indexed_map<Rational>(n, std::forward<Fn>(fn), ex);
  Rational s = 0;
  for (const auto& t : terms) s += t;
  return s;
}

}  // namespace gwh
