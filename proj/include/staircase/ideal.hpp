#pragma once

#include <vector>

#include "staircase/poly.hpp"

namespace staircase {

/// A generator list together with its ring, so that the zero ideal (no
/// generators) still knows its arity.
struct Ideal {
  RingPtr ring;
  std::vector<Poly> generators;

  Ideal(RingPtr r, std::vector<Poly> gens);
  /// Takes the ring from the first generator; `gens` must be nonempty.
  explicit Ideal(std::vector<Poly> gens);

  std::size_t arity() const { return ring->arity(); }
  std::size_t size() const { return generators.size(); }
};

}  // namespace staircase
