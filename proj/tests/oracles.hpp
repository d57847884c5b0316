#pragma once

// Brute-force reference computations used only by tests. None of these share
// code paths with the library routines they check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "staircase/diagram.hpp"
#include "staircase/poly.hpp"

namespace staircase::testing {

/// Leibniz expansion over all permutations.
inline Poly leibniz_determinant(const std::vector<std::vector<Poly>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly sum(a[0][0].ring_ptr());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly prod = Poly::constant(a[0][0].ring_ptr(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) prod = prod * a[i][perm[i]];
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Largest |T| over variable subsets T with no vertex supported inside T.
inline int subset_dimension(const Diagram& d) {
  const std::size_t m = d.arity();
  int best = -1;
  for (unsigned t = 0; t < (1u << m); ++t) {
    bool ok = true;
    for (const auto& v : d.vertices()) {
      bool inside = true;
      for (std::size_t i = 0; i < m; ++i)
        if (v[i] > 0 && !(t & (1u << i))) inside = false;
      if (inside) ok = false;
    }
    if (ok) best = std::max(best, __builtin_popcount(t));
  }
  return best;
}

/// Hilbert–Samuel count by nested loops over a box (arity ≤ 3).
inline std::uint64_t box_hilbert_samuel(const Diagram& d, std::uint32_t k) {
  const std::size_t m = d.arity();
  std::uint64_t n = 0;
  for (std::uint32_t a = 0; a <= k; ++a)
    for (std::uint32_t b = 0; b <= (m > 1 ? k : 0); ++b)
      for (std::uint32_t c = 0; c <= (m > 2 ? k : 0); ++c) {
        if (a + b + c > k) continue;
        std::vector<std::uint32_t> e{a};
        if (m > 1) e.push_back(b);
        if (m > 2) e.push_back(c);
        bool inside = false;
        for (const auto& v : d.vertices()) {
          bool div = true;
          for (std::size_t i = 0; i < m; ++i) div = div && v[i] <= e[i];
          inside = inside || div;
        }
        if (!inside) ++n;
      }
  return n;
}

}  // namespace staircase::testing
