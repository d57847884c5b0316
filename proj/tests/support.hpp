#pragma once

#include <random>
#include <string>
#include <vector>

#include "staircase/ideal.hpp"
#include "staircase/parse.hpp"
#include "staircase/poly.hpp"
#include "staircase/random.hpp"

namespace staircase::testing {

inline RingPtr xy() {
  static const RingPtr r = make_ring({"x", "y"});
  return r;
}

inline RingPtr xyz() {
  static const RingPtr r = make_ring({"x", "y", "z"});
  return r;
}

inline RingPtr ring_of_arity(std::size_t m) {
  static const RingPtr r1 = make_ring({"x"});
  switch (m) {
    case 1: return r1;
    case 2: return xy();
    default: return xyz();
  }
}

inline Poly P(const std::string& s, const RingPtr& r = xy()) { return parse_poly(s, r); }

inline Ideal I(std::initializer_list<const char*> gens, const RingPtr& r = xy()) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(parse_poly(s, r));
  return Ideal(r, std::move(g));
}

inline Exponent E(std::initializer_list<std::uint32_t> v) { return Exponent(v); }

// Unit-cleared generators of the two-generator ideal with the (1,k) gap.
inline Poly gap_g1() { return P("x^3*y + x*y^4 - x^3*y^2"); }
inline Poly gap_g2() { return P("x^2*y^3 + y^6 - x^2*y^4"); }

// Truncation at total degree B of f1 = x^3y + Σ_{k≥4} x y^k and f2 = x^2y^3 + Σ_{k≥6} y^k.
inline Poly gap_f1_truncated(unsigned B) {
  Poly f = P("x^3*y");
  for (unsigned k = 4; k + 1 <= B; ++k) f += Poly::monomial(xy(), E({1, k}));
  return f;
}
inline Poly gap_f2_truncated(unsigned B) {
  Poly f = P("x^2*y^3");
  for (unsigned k = 6; k <= B; ++k) f += Poly::monomial(xy(), E({0, k}));
  return f;
}

/// Random ideal on m ≤ 3 variables without constant terms.
inline Ideal random_ideal(std::mt19937_64& rng, std::size_t max_arity, std::size_t max_gens, std::uint64_t max_degree,
                          std::size_t max_terms = 3) {
  const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_arity)));
  const RingPtr r = ring_of_arity(m);
  const auto s = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_gens)));
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < s; ++i) {
    const auto t = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_terms)));
    gens.push_back(random_poly(r, 1, max_degree, t, 3, rng));
  }
  return Ideal(r, std::move(gens));
}

}  // namespace staircase::testing
