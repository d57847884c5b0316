#pragma once

#include <cstdint>
#include <string>

#include "staircase/poly.hpp"

namespace staircase {

/// A series p · u⁻¹ with p a polynomial and u a polynomial unit (u(0) ≠ 0).
///
/// In the local ring the unit does not change the generated ideal, so p is the
/// unit-cleared representative used for every ideal computation, while jets
/// are taken of the actual series p · u⁻¹.
class Germ {
 public:
  Germ(Poly numerator);  // NOLINT: polynomials are germs with unit 1
  Germ(Poly numerator, Poly unit);

  const Poly& representative() const { return numerator_; }
  const Poly& unit() const { return unit_; }
  bool is_polynomial() const { return unit_.is_constant(); }
  const RingPtr& ring_ptr() const { return numerator_.ring_ptr(); }
  bool is_zero() const { return numerator_.is_zero(); }

  /// j^mu of p · u⁻¹.
  Poly jet(std::uint64_t mu) const;

  /// The germ plus a polynomial: (p + q·u) / u.
  Germ plus(const Poly& q) const;

  std::string to_string() const;

 private:
  Poly numerator_;
  Poly unit_;
};

/// Power-series inverse of a unit modulo m^{mu+1}.
Poly inverse_jet(const Poly& unit, std::uint64_t mu);

}  // namespace staircase
