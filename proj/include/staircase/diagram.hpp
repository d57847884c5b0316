#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "staircase/exponent.hpp"
#include "staircase/order.hpp"

namespace staircase {

/// A staircase Γ ⊆ ℕ^m with Γ + ℕ^m = Γ, stored as its antichain of vertices.
///
/// Vertices are kept sorted by the unit-weight order so equal staircases
/// compare equal. The empty diagram is the zero ideal; the diagram whose only
/// vertex is 0 is the unit ideal.
class Diagram {
 public:
  Diagram() : arity_(0) {}
  explicit Diagram(std::size_t arity) : arity_(arity) {}

  /// Minimal elements of `exps` under componentwise ≤.
  static Diagram from_exponents(std::size_t arity, std::span<const Exponent> exps);

  std::size_t arity() const { return arity_; }
  const std::vector<Exponent>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  bool is_unit() const { return vertices_.size() == 1 && vertices_.front().is_zero(); }

  bool contains(const Exponent& b) const;
  /// Γ_this ⊆ Γ_other.
  bool is_subset_of(const Diagram& other) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::size_t arity_;
  std::vector<Exponent> vertices_;
};

/// A diagram known to be exact only on {β : L(β) ≤ length_bound}.
struct DiagramSlice {
  Diagram diagram;
  std::uint64_t length_bound = 0;
  bool certified = false;
  OrderSpec order;

  /// Membership inside the certified range; nullopt outside it.
  std::optional<bool> contains(const Exponent& b) const;
};

/// Exponents outside Γ with |β| ≤ l, ascending in the order.
std::vector<Exponent> complement_upto(const Diagram& d, std::uint64_t l);

/// #(ℕ^m ∖ Γ) ∩ {|β| ≤ k}.
std::uint64_t hilbert_samuel(const Diagram& d, std::uint64_t k);

/// Krull dimension of K{x}/(x^v : v vertex); -1 for the unit ideal.
int quotient_dimension(const Diagram& d);

/// Membership agrees on every β with L(β) ≤ l.
bool equal_upto(const Diagram& a, const Diagram& b, std::uint64_t l, const OrderSpec& ord = {});

/// Order-least β with L(β) ≤ l where membership differs.
std::optional<Exponent> first_difference(const Diagram& a, const Diagram& b, std::uint64_t l,
                                         const OrderSpec& ord = {});

/// max |v| over vertices; throws for the empty diagram.
std::uint64_t max_vertex_length(const Diagram& d);

/// Least k with {L(β) ≥ k} ⊆ Γ, when the complement is finite. For unit
/// weights this is the least k with {|β| = k} ⊆ Γ.
std::optional<std::uint64_t> power_of_maximal(const Diagram& d, const OrderSpec& ord = {});

/// #(ℕ^m ∖ Γ) when finite.
std::optional<std::uint64_t> complement_size(const Diagram& d);

/// Vertices lying on a coordinate axis (pure powers x_i^a, a ≥ 1).
std::vector<Exponent> axis_vertices(const Diagram& d);

}  // namespace staircase
