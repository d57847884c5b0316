#include "staircase/germ.hpp"

#include "staircase/error.hpp"

namespace staircase {

Germ::Germ(Poly numerator) : numerator_(std::move(numerator)), unit_(Poly::constant(numerator_.ring_ptr(), 1)) {}

Germ::Germ(Poly numerator, Poly unit) : numerator_(std::move(numerator)), unit_(std::move(unit)) {
  if (!same_ring(numerator_.ring_ptr(), unit_.ring_ptr())) throw ArityMismatch("germ numerator and unit differ in ring");
  if (unit_.constant_term() == 0) throw DomainError("denominator " + unit_.to_string() + " is not a unit");
}

Poly inverse_jet(const Poly& unit, std::uint64_t mu) {
  const Rational c = unit.constant_term();
  if (c == 0) throw DomainError("cannot invert a non-unit");
  const Rational c_inv = 1 / c;
  // u = c (1 - w) with w in the maximal ideal; u⁻¹ = c⁻¹ Σ w^k.
  Poly w = -(unit * c_inv);
  w += Poly::constant(unit.ring_ptr(), 1, unit.order());
  Poly sum = Poly::constant(unit.ring_ptr(), 1, unit.order());
  Poly power = sum;
  for (std::uint64_t k = 1; k <= mu && !w.is_zero(); ++k) {
    power = jet(power * w, mu);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * c_inv;
}

Poly Germ::jet(std::uint64_t mu) const {
  if (is_polynomial()) return staircase::jet(numerator_, mu) * (1 / unit_.constant_term());
  return staircase::jet(staircase::jet(numerator_, mu) * inverse_jet(unit_, mu), mu);
}

Germ Germ::plus(const Poly& q) const {
  if (is_polynomial()) return Germ(numerator_ + q * unit_.constant_term(), unit_);
  return Germ(numerator_ + q * unit_, unit_);
}

std::string Germ::to_string() const {
  if (unit_.is_constant() && unit_.constant_term() == 1) return numerator_.to_string();
  return "(" + numerator_.to_string() + ") / (" + unit_.to_string() + ")";
}

}  // namespace staircase
