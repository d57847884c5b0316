#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace staircase {

/// How independent rows (sweep rows, samples, batch items) are evaluated.
/// Serial is the reference path; both produce identical results.
enum class Execution { Serial, Parallel };

/// Evaluates f(0), …, f(n − 1) and returns the results in index order.
///
/// If any call throws, the exception of the lowest failing index is rethrown
/// after all iterations finish, so the outcome does not depend on scheduling.
template <class F>
auto map_indexed(std::size_t n, F&& f, Execution exec = Execution::Parallel) {
  using T = decltype(f(std::size_t{0}));
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](std::size_t i) {
    try {
      slots[i].emplace(f(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (exec == Execution::Parallel) {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) run(i);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace staircase
