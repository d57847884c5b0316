#include <random>

#include "doctest.h"
#include "staircase/error.hpp"
#include "staircase/jet_oracle.hpp"
#include "support.hpp"

using namespace staircase;
using namespace staircase::testing;

TEST_CASE("truncated_diagram") {
  const DiagramSlice s = truncated_diagram(I({"x^2 + y^3"}), 3);
  CHECK(s.certified);
  CHECK(s.length_bound == 2);
  CHECK(s.diagram.vertices() == std::vector<Exponent>{E({2, 0})});

  CHECK(truncated_diagram(I({"x", "y"}), 2).diagram.vertices() == std::vector<Exponent>{E({0, 1}), E({1, 0})});

  const Ideal jets({jet(gap_f1_truncated(20), 5), jet(gap_f2_truncated(20), 5)});
  CHECK(truncated_diagram(jets, 9).contains(E({1, 6})) == true);
  CHECK_THROWS_AS(truncated_diagram(jets, 0), DomainError);
}

TEST_CASE("truncated_quotient_dim") {
  CHECK(truncated_quotient_dim(I({"x^2", "y^2"}), 4) == 4);
  CHECK(truncated_quotient_dim(I({"1"}), 5) == 0);
  CHECK(truncated_quotient_dim(I({"x^2 + y^3", "x*y"}), 6) == 5);
}

TEST_CASE("oracle_cross_check") {
  CHECK(oracle_cross_check(Ideal({gap_g1(), gap_g2()}), 8).agree);
  const RingPtr r = make_ring({"x"});
  const auto rep = oracle_cross_check(Ideal(r, {parse_poly("x - x^2", r)}), 5);
  CHECK(rep.agree);
  CHECK(rep.oracle_slice.diagram.vertices() == std::vector<Exponent>{E({1})});
  const auto zero = oracle_cross_check(I({"0"}), 3);
  CHECK(zero.agree);
  CHECK(zero.oracle_slice.diagram.empty());
}

TEST_CASE("membership in I + M_N") {
  const TruncationBasis tb(I({"x^2 + y^3", "x*y"}), 6);
  CHECK(tb.contains(P("y^4")));
  CHECK(tb.contains(P("x^3 + x*y^3")));
  CHECK_FALSE(tb.contains(P("y^3")));
  CHECK(tb.contains(P("y^7 + x^9")));
}

TEST_CASE("property: slice stability, jet insensitivity, monotonicity") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const Ideal ideal = random_ideal(rng, 3, 3, 4);
    const std::uint64_t N = 7;
    const DiagramSlice big = truncated_diagram(ideal, N);
    for (std::uint64_t n = 1; n < N; ++n)
      CHECK(equal_upto(big.diagram, truncated_diagram(ideal, n).diagram, n - 1));

    std::vector<Poly> perturbed;
    for (const auto& g : ideal.generators)
      perturbed.push_back(jet(g, N - 1) + random_poly(ideal.ring, N, N + 2, 2, 3, rng));
    CHECK(truncated_diagram(Ideal(ideal.ring, perturbed), N).diagram == big.diagram);

    std::vector<Poly> more = ideal.generators;
    more.push_back(random_poly(ideal.ring, 1, 4, 2, 3, rng));
    CHECK(big.diagram.is_subset_of(truncated_diagram(Ideal(ideal.ring, more), N).diagram));
  }
}
