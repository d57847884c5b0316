#pragma once

#include <cstdint>
#include <random>

#include "staircase/poly.hpp"

namespace staircase {

// Reports echo seeds, so draws are mapped by hand rather than through
// std::uniform_int_distribution, whose output is implementation-defined.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// Exponent of total degree `degree` on the fibre variables of `ring`.
Exponent random_exponent(const RingSpec& ring, std::uint64_t degree, std::mt19937_64& rng);

/// Up to `terms` terms with total degree in [min_degree, max_degree] on the
/// fibre variables and nonzero integer coefficients in [-coeff_bound, coeff_bound].
Poly random_poly(const RingPtr& ring, std::uint64_t min_degree, std::uint64_t max_degree, std::size_t terms,
                 std::int64_t coeff_bound, std::mt19937_64& rng);

}  // namespace staircase
