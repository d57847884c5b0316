#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <span>
#include <string>
#include <vector>

#include "staircase/exponent.hpp"
#include "staircase/order.hpp"
#include "staircase/ring.hpp"

namespace staircase {

using Rational = mpq_class;

struct Term {
  Rational coefficient;
  Exponent exponent;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients, standing in for an
/// element of K{x}.
///
/// Terms are kept strictly ascending under the polynomial's OrderSpec, so the
/// initial term is the first one. Zero is the empty term list. All operations
/// return canonical form.
class Poly {
 public:
  explicit Poly(RingPtr ring, OrderSpec order = {});

  static Poly constant(RingPtr ring, const Rational& c, OrderSpec order = {});
  static Poly monomial(RingPtr ring, Exponent e, const Rational& c = 1, OrderSpec order = {});
  static Poly variable(RingPtr ring, std::size_t index, OrderSpec order = {});
  /// Sorts, merges duplicate exponents and drops zero coefficients.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms, OrderSpec order = {});

  const RingSpec& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const OrderSpec& order() const { return order_; }
  std::size_t arity() const { return ring_->arity(); }

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Order-minimal term; throws DomainError for the zero polynomial.
  const Term& initial_term() const;
  const Exponent& initial_exponent() const { return initial_term().exponent; }
  /// Maximum total degree over the support; 0 for the zero polynomial.
  std::uint64_t degree() const;
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;

  /// Same element re-sorted under another order.
  Poly with_order(const OrderSpec& order) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  /// c · x^shift · this.
  Poly mul_term(const Rational& c, const Exponent& shift) const;
  /// this −= c · x^shift · g, in a single merge pass.
  void sub_mul_term(const Rational& c, const Exponent& shift, const Poly& g);
  /// Terms of weighted length < bound.
  Poly truncate_below(std::uint64_t bound, const OrderSpec& ord = {}) const;

  /// Structural equality: same ring and same element (orders may differ).
  friend bool operator==(const Poly& a, const Poly& b);

  /// Grammar-compatible text, initial term first.
  std::string to_string() const;

 private:
  void check_compatible(const Poly& o) const;
  void merge(const Poly& o, bool subtract);

  RingPtr ring_;
  OrderSpec order_;
  std::vector<Term> terms_;
};

Exponent initial_exponent(const Poly& f, const OrderSpec& ord);
Term initial_term(const Poly& f, const OrderSpec& ord);

/// Image modulo m^{mu+1}: the terms of total degree ≤ mu.
Poly jet(const Poly& f, std::uint64_t mu);

/// Max total degree minus the length of the initial exponent under `ord`.
std::uint64_t ecart(const Poly& f, const OrderSpec& ord = {});

/// Substitutes y = 0 for the base variables; the result lives in fibre_ring.
Poly evaluate_base_zero(const Poly& f);

/// Embeds an x-only polynomial into a ring that adds base variables in front.
Poly lift_to_base(const Poly& f, const RingPtr& target);

/// Divides by the rational content and makes the initial coefficient positive.
Poly primitive_part(const Poly& f);

std::string format_rational(const Rational& q);

}  // namespace staircase
