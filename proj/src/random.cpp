#include "staircase/random.hpp"

#include "staircase/error.hpp"

namespace staircase {

Exponent random_exponent(const RingSpec& ring, std::uint64_t degree, std::mt19937_64& rng) {
  Exponent e(ring.arity());
  const auto n = ring.base_split();
  const auto m = ring.fibre_arity();
  if (m == 0) throw DomainError("ring has no fibre variables");
  for (std::uint64_t k = 0; k < degree; ++k) e[n + static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(m) - 1))] += 1;
  return e;
}

Poly random_poly(const RingPtr& ring, std::uint64_t min_degree, std::uint64_t max_degree, std::size_t terms,
                 std::int64_t coeff_bound, std::mt19937_64& rng) {
  if (min_degree > max_degree) throw DomainError("empty degree range");
  std::vector<Term> out;
  for (std::size_t k = 0; k < terms; ++k) {
    const auto d = static_cast<std::uint64_t>(
        uniform_int(rng, static_cast<std::int64_t>(min_degree), static_cast<std::int64_t>(max_degree)));
    std::int64_t c = 0;
    while (c == 0) c = uniform_int(rng, -coeff_bound, coeff_bound);
    out.push_back({Rational(static_cast<long>(c)), random_exponent(*ring, d, rng)});
  }
  return Poly::from_terms(ring, std::move(out));
}

}  // namespace staircase
