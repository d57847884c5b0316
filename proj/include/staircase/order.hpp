#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "staircase/exponent.hpp"

namespace staircase {

/// Weighted degree-then-lexicographic well-order on ℕ^m.
///
/// Exponents are compared through the key (L(β), β_1, …, β_m) with
/// L(β) = Σ λ_i β_i. The initial exponent of a series is the minimum of its
/// support under this order. An empty weight vector means all weights are 1
/// and works for any arity.
class OrderSpec {
 public:
  OrderSpec() = default;
  explicit OrderSpec(std::vector<std::uint32_t> weights);

  bool is_unit() const { return weights_.empty(); }
  std::span<const std::uint32_t> weights() const { return weights_; }
  std::uint32_t weight(std::size_t i) const { return weights_.empty() ? 1 : weights_[i]; }

  /// Weighted length L(β).
  std::uint64_t length(const Exponent& b) const;

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  /// Throws ArityMismatch when the weights cannot apply to `arity` variables.
  void check_arity(std::size_t arity) const;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  std::vector<std::uint32_t> weights_;
};

inline std::strong_ordering compare(const Exponent& a, const Exponent& b, const OrderSpec& ord) {
  return ord.compare(a, b);
}

/// Comparator adaptor for ordered containers.
struct OrderLess {
  const OrderSpec* order;
  bool operator()(const Exponent& a, const Exponent& b) const { return order->less(a, b); }
};

/// All β ∈ ℕ^arity with L(β) ≤ bound, sorted ascending by `ord`.
std::vector<Exponent> exponents_upto(std::size_t arity, std::uint64_t bound, const OrderSpec& ord = {});

}  // namespace staircase
