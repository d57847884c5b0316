#include <random>

#include "doctest.h"
#include "staircase/error.hpp"
#include "staircase/jet_oracle.hpp"
#include "staircase/standard_basis.hpp"
#include "support.hpp"

using namespace staircase;
using namespace staircase::testing;

namespace {

std::vector<Exponent> vertices(const Diagram& d) { return d.vertices(); }

void check_representation(const Poly& f, const std::vector<Poly>& reducers) {
  const auto nf = mora_normal_form(f, reducers, {}, {kDefaultPoolCeiling, true});
  REQUIRE(nf.trace.unit.has_value());
  const Poly& u = *nf.trace.unit;
  CHECK(u.constant_term() != 0);
  Poly combo(f.ring_ptr());
  for (std::size_t i = 0; i < reducers.size(); ++i) combo += nf.trace.quotients[i] * reducers[i];
  CHECK(u * f - nf.remainder == combo);
}

}  // namespace

TEST_CASE("Mora normal form") {
  SUBCASE("self reduction") {
    CHECK(mora_normal_form(P("x - x^2", make_ring({"x"})), std::vector<Poly>{P("x - x^2", make_ring({"x"}))})
              .remainder.is_zero());
  }
  SUBCASE("reduction through a unit needs pool growth") {
    const RingPtr r = make_ring({"x"});
    const auto nf = mora_normal_form(P("x^2", r), std::vector<Poly>{P("x - x^2", r)});
    CHECK(nf.remainder.is_zero());
    CHECK(nf.trace.pool_growth >= 1);
    check_representation(P("x^2", r), {P("x - x^2", r)});
  }
  SUBCASE("no divisible initial exponent") {
    const auto nf = mora_normal_form(P("y^2"), std::vector<Poly>{P("x")});
    CHECK(nf.remainder == P("y^2"));
    CHECK(nf.trace.steps == 0);
  }
  SUBCASE("zero reducer is rejected") {
    CHECK_THROWS_AS(mora_normal_form(P("x"), std::vector<Poly>{P("0")}), DomainError);
  }
  SUBCASE("pool ceiling") {
    const RingPtr r = make_ring({"x"});
    CHECK_THROWS_AS(mora_normal_form(P("x^2", r), std::vector<Poly>{P("x - x^2", r)}, {}, {1, false}),
                    ResourceLimitExceeded);
  }
  SUBCASE("representation u·f − r = Σ q·g on random input") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
      std::vector<Poly> reducers;
      for (int i = 0; i < 2; ++i) {
        Poly g = random_poly(xy(), 1, 4, 3, 3, rng);
        if (!g.is_zero()) reducers.push_back(g);
      }
      if (reducers.empty()) continue;
      check_representation(random_poly(xy(), 1, 5, 4, 3, rng), reducers);
    }
  }
}

TEST_CASE("standard bases of small ideals") {
  CHECK(vertices(diagram_of_ideal(Ideal({gap_g1(), gap_g2()}))) == std::vector<Exponent>{E({3, 1}), E({2, 3})});
  CHECK(vertices(diagram_of_ideal(I({"x", "y"}))) == std::vector<Exponent>{E({0, 1}), E({1, 0})});
  CHECK(vertices(diagram_of_ideal(I({"x^2 + y^3", "x*y"}))) ==
        std::vector<Exponent>{E({1, 1}), E({2, 0}), E({0, 4})});
  CHECK(diagram_of_ideal(I({"0"})).empty());
  CHECK(diagram_of_ideal(Ideal(xy(), {})).empty());
  CHECK(diagram_of_ideal(I({"1"})).is_unit());
  CHECK(diagram_of_ideal(I({"x - 1 + y^2", "y^5"})).is_unit());

  // Jets of the gap ideal at μ = 5 pick up (1, 6).
  const Ideal jets({jet(gap_f1_truncated(20), 5), jet(gap_f2_truncated(20), 5)});
  CHECK(diagram_of_ideal(jets).contains(E({1, 6})));
  CHECK_FALSE(diagram_of_ideal(Ideal({gap_g1(), gap_g2()})).contains(E({1, 6})));
}

TEST_CASE("standard basis bookkeeping") {
  const SBasis sb = standard_basis(I({"x^2 + y^3", "x*y"}));
  CHECK(sb.generators.size() == 2);
  CHECK(!sb.trace.empty());
  CHECK(!format_trace(sb).empty());
  for (const auto& b : sb.basis) CHECK(b.initial_term().coefficient > 0);
  CHECK_THROWS_AS(standard_basis(I({"x", "y"}), OrderSpec({1, 2, 3})), ArityMismatch);
}

TEST_CASE("property: standard basis invariants on random ideals") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const Ideal ideal = random_ideal(rng, 3, 3, 4);
    const SBasis sb = standard_basis(ideal);

    // Inputs reduce to zero against the basis.
    for (const auto& g : ideal.generators)
      if (!g.is_zero()) CHECK(mora_normal_form(g, sb.basis).remainder.is_zero());

    // Buchberger criterion, re-checked.
    for (std::size_t i = 0; i < sb.basis.size(); ++i)
      for (std::size_t j = i + 1; j < sb.basis.size(); ++j)
        CHECK(mora_normal_form(s_polynomial(sb.basis[i], sb.basis[j], {}), sb.basis).remainder.is_zero());

    // Soundness up to a degree bound: basis elements lie in I + m^N.
    const TruncationBasis tb(ideal, 9);
    for (const auto& b : sb.basis) CHECK(tb.contains(b));

    // Completeness below N against the oracle.
    const auto rep = oracle_cross_check(ideal, 7);
    CHECK_MESSAGE(rep.agree, "first difference ", rep.first_difference ? rep.first_difference->to_string() : "");

    // Unit invariance.
    std::vector<Poly> scaled = ideal.generators;
    const auto var = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(ideal.arity()) - 1));
    scaled[0] = scaled[0] * (Poly::constant(ideal.ring, 1) + Poly::variable(ideal.ring, var));
    CHECK(diagram_of_ideal(Ideal(ideal.ring, scaled)) == sb.diagram);
  }
}

TEST_CASE("property: weighted orders agree with the oracle") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 30; ++trial) {
    const Ideal ideal = random_ideal(rng, 2, 2, 4);
    std::vector<std::uint32_t> w;
    for (std::size_t i = 0; i < ideal.arity(); ++i) w.push_back(static_cast<std::uint32_t>(uniform_int(rng, 1, 3)));
    const OrderSpec ord(w);
    const auto rep = oracle_cross_check(ideal, 9, ord);
    CHECK(rep.agree);
  }
}

TEST_CASE("monomial times unit generators") {
  // Classic Mora spends minutes inverting the units here.
  const Ideal ideal = I({"-3*y - 2*y^2*z^2", "-2*y + 2*x*y*z + 2*y^3*z", "-2*x*y - x^2*z + x*y^2*z"}, xyz());
  const SBasis sb = standard_basis(ideal);
  CHECK(sb.diagram.vertices() == std::vector<Exponent>{E({0, 1, 0}), E({2, 0, 1})});
  for (const auto& g : ideal.generators) CHECK(mora_normal_form(g, sb.basis).remainder.is_zero());
  CHECK(oracle_cross_check(ideal, 8).agree);

  const Ideal units = I({"2*x - 5*x*z - 4*y^4", "y + 2*x + 5*x^2*z", "y - 4*x^2*z^2 - 2*x^3*y"}, xyz());
  CHECK(diagram_of_ideal(units).vertices() == std::vector<Exponent>{E({0, 1, 0}), E({1, 0, 0})});
}

TEST_CASE("runaway reduction hits a ceiling") {
  // Reducing the pair of the first generator with x*y^2 never settles.
  const Ideal ideal = I({"-z + 3*x + 3*x*y^3 - 3*x^4*y^2*z", "-y^2*z - 2*x^2*z + x^2*z^3 + 3*x*y^5*z"}, xyz());
  StandardBasisOptions bits;
  bits.coefficient_bits_ceiling = 1024;
  CHECK_THROWS_AS(standard_basis(ideal, {}, bits), ResourceLimitExceeded);
  StandardBasisOptions steps;
  steps.step_ceiling = 500;
  CHECK_THROWS_AS(standard_basis(ideal, {}, steps), ResourceLimitExceeded);
  steps.engine = BasisEngine::Mora;
  CHECK_THROWS_AS(standard_basis(ideal, {}, steps), ResourceLimitExceeded);
}

TEST_CASE("property: both engines give the same diagram") {
  std::mt19937_64 rng(1);
  StandardBasisOptions mora;
  mora.engine = BasisEngine::Mora;
  for (int trial = 0; trial < 200; ++trial) {
    const Ideal ideal = random_ideal(rng, 3, 3, 4);
    CHECK(diagram_of_ideal(ideal) == diagram_of_ideal(ideal, {}, mora));
  }
}
