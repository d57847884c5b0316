#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "staircase/error.hpp"
#include "staircase/germ.hpp"
#include "staircase/linear.hpp"
#include "support.hpp"

using namespace staircase;
using namespace staircase::testing;

TEST_CASE("compare: degree first, then lexicographic") {
  const OrderSpec ord;
  CHECK(ord.compare(E({3, 1}), E({1, 4})) < 0);
  CHECK(ord.compare(E({0, 0}), E({0, 1})) < 0);
  CHECK(ord.compare(E({0, 0}), E({5, 0})) < 0);
  CHECK(ord.compare(E({1, 2}), E({1, 2})) == 0);
  // Equal length: smaller first entry wins.
  CHECK(ord.compare(E({0, 1}), E({1, 0})) < 0);
  CHECK_THROWS_AS(ord.compare(E({1}), E({1, 0})), ArityMismatch);
}

TEST_CASE("compare: weighted length") {
  const OrderSpec ord({1, 3});
  CHECK(ord.length(E({1, 1})) == 4);
  CHECK(ord.compare(E({2, 0}), E({0, 1})) < 0);
  CHECK_THROWS_AS(OrderSpec({1, 0}), DomainError);
  CHECK_THROWS_AS(ord.length(E({1, 1, 1})), ArityMismatch);
  CHECK(OrderSpec({1, 1}) == OrderSpec{});
}

TEST_CASE("initial exponent and term") {
  CHECK(P("x^3*y + x*y^4").initial_exponent() == E({3, 1}));
  CHECK(P("x^2*y^3 + y^6").initial_exponent() == E({2, 3}));
  CHECK(P("7").initial_exponent() == E({0, 0}));

  const Term t = P("2*x^3*y + x*y^4").initial_term();
  CHECK(t.coefficient == 2);
  CHECK(t.exponent == E({3, 1}));
  CHECK(P("-y").initial_term().coefficient == -1);
  // Key (1,(0,1)) precedes (1,(1,0)): the initial term of x + y is y.
  CHECK(P("x + y").initial_exponent() == E({0, 1}));

  CHECK_THROWS_AS(P("0").initial_term(), DomainError);
  CHECK_THROWS_AS(initial_exponent(P("0"), OrderSpec{}), DomainError);
}

TEST_CASE("initial exponent under a weighted order scans the support") {
  const Poly f = P("y + x^2");
  CHECK(initial_exponent(f, OrderSpec{}) == E({0, 1}));
  CHECK(initial_exponent(f, OrderSpec({1, 3})) == E({2, 0}));
  CHECK(f.with_order(OrderSpec({1, 3})).initial_exponent() == E({2, 0}));
}

TEST_CASE("jet") {
  CHECK(jet(P("x^3*y + x*y^4 + x*y^5 + x*y^6"), 5) == P("x^3*y + x*y^4"));
  CHECK(jet(P("0"), 3).is_zero());
  CHECK(jet(P("3 + x"), 0) == P("3"));
}

TEST_CASE("arithmetic") {
  const Poly g1 = gap_g1();
  const Poly g2 = gap_g2();
  CHECK((P("y^2") * g1 - P("x") * g2).is_zero());
  CHECK((g1 + (-g1)).is_zero());
  const Poly lhs = P("y^2") * jet(gap_f1_truncated(20), 5) - P("x") * jet(gap_f2_truncated(20), 5);
  CHECK(lhs == P("x*y^6"));
  CHECK((P("x + 1/2") * Rational(2)) == P("2*x + 1"));
  CHECK_THROWS_AS(P("x") + P("x", make_ring({"x", "z"})), ArityMismatch);
}

TEST_CASE("evaluation at y = 0") {
  const RingPtr r = make_ring({"y1", "y2", "x"}, 2);
  CHECK(evaluate_base_zero(parse_poly("y1 - x^2", r)) == parse_poly("-x^2", fibre_ring(r)));
  CHECK(evaluate_base_zero(parse_poly("x^3", r)) == parse_poly("x^3", fibre_ring(r)));
  CHECK(evaluate_base_zero(parse_poly("y1*y2", r)).is_zero());
  CHECK(evaluate_base_zero(parse_poly("y1*y2", r)).arity() == 1);
  CHECK_THROWS_AS(evaluate_base_zero(P("x")), DomainError);
}

TEST_CASE("coordinate changes") {
  const RingPtr r = make_ring({"a", "b"});
  CHECK(apply_coord_change(parse_poly("a", r), CoordChange::identity(2)) == parse_poly("a", r));
  const CoordChange swap({{0, 1}, {1, 0}});
  CHECK(apply_coord_change(parse_poly("a", r), swap) == parse_poly("b", r));
  const CoordChange shear({{1, 1}, {0, 1}});
  CHECK(apply_coord_change(parse_poly("a*b", r), shear) == parse_poly("a*b + b^2", r));
  CHECK_THROWS_AS(CoordChange({{1, 1}, {2, 2}}), DomainError);
  CHECK_THROWS_AS(apply_coord_change(parse_poly("a", r), CoordChange::identity(3)), ArityMismatch);

  // Base variables stay put.
  const RingPtr rb = make_ring({"y", "a", "b"}, 1);
  CHECK(apply_coord_change(parse_poly("y*a", rb), swap) == parse_poly("y*b", rb));
}

TEST_CASE("determinant") {
  const Poly one = P("1"), zero = P("0");
  CHECK(determinant({{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}) == one);
  CHECK(determinant({{P("x"), P("y")}, {P("x"), P("y")}}).is_zero());
  CHECK_THROWS_AS(determinant({{one, zero}}), DomainError);

  for (unsigned mu = 5; mu <= 7; ++mu) {
    const Poly j1 = jet(gap_f1_truncated(20), mu);
    const Poly j2 = jet(gap_f2_truncated(20), mu);
    const std::vector<std::vector<Poly>> rows{{one, zero, j1}, {one, one, j2}, {P("y^2 - x"), P("-x"), zero}};
    // Row order (G1, G2, G3) gives x·j2 − y^2·j1.
    CHECK(determinant(rows) == P("x") * j2 - P("y^2") * j1);
  }
}

TEST_CASE("determinant agrees with Leibniz expansion on random 3x3 input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<Poly>> a(3);
    for (auto& row : a)
      for (int j = 0; j < 3; ++j) row.push_back(random_poly(xy(), 0, 2, 3, 4, rng));
    CHECK(determinant(a) == leibniz_determinant(a));
  }
}

TEST_CASE("ecart") {
  CHECK(ecart(P("x^3*y + x*y^4")) == 1);
  CHECK(ecart(P("x^2*y")) == 0);
  CHECK(ecart(P("x + y^3")) == 2);
  CHECK_THROWS_AS(ecart(P("0")), DomainError);
}

TEST_CASE("germ jets expand the unit inverse") {
  const Germ f1(gap_g1(), P("1 - y"));
  const Germ f2(gap_g2(), P("1 - y"));
  for (unsigned mu = 0; mu <= 12; ++mu) {
    CHECK(f1.jet(mu) == jet(gap_f1_truncated(20), mu));
    CHECK(f2.jet(mu) == jet(gap_f2_truncated(20), mu));
  }
  CHECK(f1.representative() == gap_g1());
  CHECK_THROWS_AS(Germ(P("x"), P("y")), DomainError);
  CHECK(Germ(P("2*x"), P("2")).jet(3) == P("x"));
  CHECK(inverse_jet(P("1 + x"), 3) == P("1 - x + x^2 - x^3"));
}

TEST_CASE("primitive part") {
  CHECK(primitive_part(P("-2/3*x + 4/9*y")) == P("-3*x + 2*y"));
  CHECK(primitive_part(P("6*x^2 + 4*x*y")) == P("3*x^2 + 2*x*y"));
}

TEST_CASE("property: order axioms on random exponents") {
  std::mt19937_64 rng(5);
  const OrderSpec ord;
  auto rexp = [&] {
    return E({static_cast<std::uint32_t>(uniform_int(rng, 0, 5)), static_cast<std::uint32_t>(uniform_int(rng, 0, 5)),
              static_cast<std::uint32_t>(uniform_int(rng, 0, 5))});
  };
  for (int i = 0; i < 300; ++i) {
    const Exponent a = rexp(), b = rexp(), c = rexp();
    const auto ab = ord.compare(a, b);
    CHECK(((ab < 0) + (ab == 0) + (ab > 0)) == 1);
    CHECK((ab == 0) == (a == b));
    CHECK((ab < 0) == (ord.compare(b, a) > 0));
    if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
    if (ord.less(a, b)) CHECK(ord.less(a + c, b + c));
    CHECK(!ord.less(a, Exponent(3)));
  }
}

TEST_CASE("property: strictly decreasing chains are bounded by the count below the start") {
  const OrderSpec ord;
  const Exponent start = E({2, 1, 1});
  const auto below = exponents_upto(3, start.length());
  const auto pos = std::find(below.begin(), below.end(), start) - below.begin();
  // The longest strictly decreasing chain from `start` walks every smaller exponent.
  CHECK(static_cast<std::size_t>(pos) + 1 <= below.size());
  for (std::size_t i = 1; i < below.size(); ++i) CHECK(ord.less(below[i - 1], below[i]));
}

TEST_CASE("property: jets, products and initial exponents") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Poly f = random_poly(xyz(), 0, 5, 4, 5, rng);
    const Poly g = random_poly(xyz(), 0, 5, 4, 5, rng);
    const auto mu = static_cast<std::uint64_t>(uniform_int(rng, 0, 7));
    CHECK(jet(jet(f, mu), mu) == jet(f, mu));
    CHECK(jet(f * g, mu) == jet(jet(f, mu) * jet(g, mu), mu));
    if (!f.is_zero() && !g.is_zero())
      CHECK((f * g).initial_exponent() == f.initial_exponent() + g.initial_exponent());
    if (!f.is_zero() && mu >= f.initial_exponent().length()) {
      const Poly h = jet(f, mu) + random_poly(xyz(), mu + 1, mu + 3, 3, 5, rng);
      CHECK(h.initial_exponent() == f.initial_exponent());
    }
  }
}
