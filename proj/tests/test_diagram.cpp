#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "staircase/diagram.hpp"
#include "staircase/error.hpp"
#include "support.hpp"

using namespace staircase;
using namespace staircase::testing;

namespace {

Diagram D(std::size_t m, std::vector<Exponent> v) { return Diagram::from_exponents(m, v); }

const Diagram kGap = D(2, {E({3, 1}), E({2, 3})});

}  // namespace

TEST_CASE("from_exponents keeps minimal elements") {
  CHECK(D(2, {E({2, 0}), E({0, 2}), E({2, 1})}).vertices() == std::vector<Exponent>{E({0, 2}), E({2, 0})});
  CHECK(D(2, {}).empty());
  CHECK(kGap.vertices().size() == 2);
  CHECK_THROWS_AS(D(2, {E({1, 0}), E({1})}), ArityMismatch);
  const Diagram d = D(3, {E({1, 1, 0}), E({0, 2, 1}), E({1, 1, 1}), E({2, 2, 0})});
  CHECK(D(3, d.vertices()) == d);
}

TEST_CASE("contains") {
  CHECK_FALSE(kGap.contains(E({1, 7})));
  CHECK(kGap.contains(E({4, 2})));
  CHECK_FALSE(Diagram(2).contains(E({3, 3})));
  CHECK_THROWS_AS(kGap.contains(E({1})), ArityMismatch);
}

TEST_CASE("complement_upto") {
  CHECK(complement_upto(D(2, {E({2, 0}), E({0, 2})}), 2) ==
        std::vector<Exponent>{E({0, 0}), E({0, 1}), E({1, 0}), E({1, 1})});
  CHECK(complement_upto(Diagram(1), 2) == std::vector<Exponent>{E({0}), E({1}), E({2})});
  CHECK(complement_upto(D(3, {E({0, 0, 0})}), 5).empty());
}

TEST_CASE("hilbert_samuel") {
  const Diagram maximal = D(2, {E({1, 0}), E({0, 1})});
  for (unsigned k = 0; k < 6; ++k) CHECK(hilbert_samuel(maximal, k) == 1);
  const Diagram sq = D(2, {E({2, 0}), E({0, 2})});
  CHECK(hilbert_samuel(sq, 0) == 1);
  CHECK(hilbert_samuel(sq, 1) == 3);
  CHECK(hilbert_samuel(sq, 2) == 4);
  CHECK(hilbert_samuel(sq, 3) == 4);
  CHECK(hilbert_samuel(kGap, 1) == 3);
  CHECK(hilbert_samuel(kGap, 2) == 6);
  // Empty diagram: binomial(k + m, m).
  CHECK(hilbert_samuel(Diagram(3), 4) == 35);
}

TEST_CASE("quotient_dimension") {
  CHECK(quotient_dimension(D(2, {E({1, 0})})) == 1);
  CHECK(quotient_dimension(D(2, {E({2, 0}), E({0, 3})})) == 0);
  CHECK(quotient_dimension(kGap) == 1);
  CHECK(quotient_dimension(Diagram(3)) == 3);
  CHECK(quotient_dimension(D(2, {E({0, 0})})) == -1);
}

TEST_CASE("equal_upto") {
  CHECK(equal_upto(kGap, kGap, 20));
  CHECK(equal_upto(D(2, {E({1, 0})}), Diagram(2), 0));
  CHECK_FALSE(equal_upto(D(2, {E({1, 0})}), Diagram(2), 1));
  const Diagram with_gap_filled = D(2, {E({3, 1}), E({2, 3}), E({1, 6})});
  CHECK(equal_upto(with_gap_filled, kGap, 4));
  CHECK(equal_upto(with_gap_filled, kGap, 6));
  CHECK_FALSE(equal_upto(with_gap_filled, kGap, 7));
  CHECK(first_difference(with_gap_filled, kGap, 7) == E({1, 6}));
  CHECK_THROWS_AS(equal_upto(kGap, Diagram(3), 2), ArityMismatch);
}

TEST_CASE("max_vertex_length") {
  CHECK(max_vertex_length(kGap) == 5);
  CHECK(max_vertex_length(D(3, {E({0, 0, 0})})) == 0);
  CHECK(max_vertex_length(D(2, {E({2, 0}), E({0, 7})})) == 7);
  CHECK_THROWS_AS(max_vertex_length(Diagram(2)), DomainError);
}

TEST_CASE("power_of_maximal") {
  CHECK(power_of_maximal(D(2, {E({2, 0}), E({1, 1}), E({0, 2})})) == 2u);
  CHECK(power_of_maximal(D(2, {E({2, 0}), E({0, 2})})) == 3u);
  CHECK_FALSE(power_of_maximal(kGap).has_value());
  CHECK(power_of_maximal(D(2, {E({0, 0})})) == 0u);
  CHECK(complement_size(D(2, {E({2, 0}), E({1, 1}), E({0, 4})})) == 5u);
}

TEST_CASE("slices answer only inside their bound") {
  const DiagramSlice s{kGap, 5, true, {}};
  CHECK(s.contains(E({3, 1})) == true);
  CHECK(s.contains(E({1, 4})) == false);
  CHECK_FALSE(s.contains(E({1, 5})).has_value());
}

TEST_CASE("property: staircase invariants on random diagrams") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    std::vector<Exponent> gens;
    const auto count = uniform_int(rng, 0, 4);
    for (int i = 0; i < count; ++i) {
      Exponent e(m);
      for (std::size_t j = 0; j < m; ++j) e[j] = static_cast<std::uint32_t>(uniform_int(rng, 0, 4));
      if (!e.is_zero()) gens.push_back(e);
    }
    const Diagram d = Diagram::from_exponents(m, gens);
    CHECK(Diagram::from_exponents(m, d.vertices()) == d);
    CHECK(quotient_dimension(d) == subset_dimension(d));

    std::uint64_t prev = 0;
    for (std::uint32_t k = 0; k <= 9; ++k) {
      const auto h = hilbert_samuel(d, k);
      CHECK(h == box_hilbert_samuel(d, k));
      CHECK(h >= prev);
      prev = h;
    }

    const auto pm = power_of_maximal(d);
    CHECK(pm.has_value() == (quotient_dimension(d) == 0));
    CHECK(pm.has_value() == complement_size(d).has_value());
    if (pm) {
      const std::uint64_t k = *pm;
      CHECK(hilbert_samuel(d, k + 2) == hilbert_samuel(d, k));
      if (k > 0) CHECK(hilbert_samuel(d, k - 1) == *complement_size(d));
    }

    for (const auto& v : d.vertices()) {
      Exponent shift(m);
      for (std::size_t j = 0; j < m; ++j) shift[j] = static_cast<std::uint32_t>(uniform_int(rng, 0, 3));
      CHECK(d.contains(v + shift));
    }
  }
}

TEST_CASE("property: equal_upto matches Hilbert–Samuel agreement under containment") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Exponent> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(E({static_cast<std::uint32_t>(uniform_int(rng, 0, 5)), static_cast<std::uint32_t>(uniform_int(rng, 0, 5))}));
    const Diagram small = Diagram::from_exponents(2, gens);
    gens.push_back(E({static_cast<std::uint32_t>(uniform_int(rng, 0, 6)), static_cast<std::uint32_t>(uniform_int(rng, 0, 6))}));
    const Diagram big = Diagram::from_exponents(2, gens);
    REQUIRE(small.is_subset_of(big));
    for (std::uint64_t L = 0; L <= 12; ++L) {
      bool hs_agree = true;
      for (std::uint64_t k = 0; k <= L; ++k) hs_agree = hs_agree && hilbert_samuel(small, k) == hilbert_samuel(big, k);
      CHECK(equal_upto(small, big, L) == hs_agree);
    }
  }
}
