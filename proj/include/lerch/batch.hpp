#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "lerch/engine.hpp"

namespace lerch::batch {

/// Result or captured error of one query.
struct Outcome {
  EvalResult result;
  std::optional<ErrorKind> error;
  std::string message;
};

Outcome evaluate_one(const LerchQuery& q, Method method, double tol);

/// OpenMP kernel over independent queries; output order matches input.
std::vector<Outcome> evaluate(std::span<const LerchQuery> queries, double tol,
                              Method method = Method::Auto);

/// Single-threaded reference for `evaluate`; results are bit-identical.
std::vector<Outcome> evaluate_serial(std::span<const LerchQuery> queries,
                                     double tol, Method method = Method::Auto);

/// Number of threads the kernels will use (1 without OpenMP).
int max_threads();

/// out[i] = f(i) for i < count, with iterations spread over OpenMP threads.
/// f must not throw.
template <class F>
auto parallel_map(std::size_t count, F&& f)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  }
  return out;
}

template <class F>
auto serial_map(std::size_t count, F&& f)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
  return out;
}

}  // namespace lerch::batch
