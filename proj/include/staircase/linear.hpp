#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "staircase/poly.hpp"

namespace staircase {

/// Invertible linear substitution x_i ↦ Σ_j c_ij x_j on the fibre variables.
/// Base variables are never mixed in.
class CoordChange {
 public:
  explicit CoordChange(std::vector<std::vector<Rational>> matrix);

  static CoordChange identity(std::size_t n);
  /// Entries uniform in [-bound, bound]; resamples until invertible.
  static CoordChange random(std::size_t n, std::int64_t bound, std::mt19937_64& rng);

  std::size_t size() const { return matrix_.size(); }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }

 private:
  std::vector<std::vector<Rational>> matrix_;
};

/// Exact rank of a rational matrix (row reduction).
std::size_t rank(std::vector<std::vector<Rational>> m);

Poly apply_coord_change(const Poly& f, const CoordChange& c);

/// Determinant of a square polynomial matrix by cofactor expansion.
Poly determinant(const std::vector<std::vector<Poly>>& rows);

}  // namespace staircase
