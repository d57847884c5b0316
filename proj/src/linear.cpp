#include "staircase/linear.hpp"

#include "staircase/error.hpp"
#include "staircase/random.hpp"

namespace staircase {

std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

CoordChange::CoordChange(std::vector<std::vector<Rational>> matrix) : matrix_(std::move(matrix)) {
  for (const auto& row : matrix_)
    if (row.size() != matrix_.size()) throw DomainError("coordinate change must be a square matrix");
  if (rank(matrix_) != matrix_.size()) throw DomainError("coordinate change is singular");
}

CoordChange CoordChange::identity(std::size_t n) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return CoordChange(std::move(m));
}

CoordChange CoordChange::random(std::size_t n, std::int64_t bound, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<long>(uniform_int(rng, -bound, bound));
    if (rank(m) == n) return CoordChange(std::move(m));
  }
}

Poly apply_coord_change(const Poly& f, const CoordChange& c) {
  const std::size_t base = f.ring().base_split();
  const std::size_t m = f.ring().fibre_arity();
  if (c.size() != m) throw ArityMismatch("coordinate change size does not match the fibre variables");
  const RingPtr& ring = f.ring_ptr();

  std::vector<Poly> images;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Term> lin;
    for (std::size_t j = 0; j < m; ++j)
      lin.push_back({c.matrix()[i][j], Exponent::axis(ring->arity(), base + j)});
    images.push_back(Poly::from_terms(ring, std::move(lin), f.order()));
  }
  std::vector<std::vector<Poly>> powers(m);
  auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(Poly::constant(ring, 1, f.order()));
    while (p.size() <= k) p.push_back(p.back() * images[i]);
    return p[k];
  };

  Poly out(ring, f.order());
  for (const auto& t : f.terms()) {
    Exponent base_part(ring->arity());
    for (std::size_t i = 0; i < base; ++i) base_part[i] = t.exponent[i];
    Poly prod = Poly::monomial(ring, base_part, t.coefficient, f.order());
    for (std::size_t i = 0; i < m; ++i)
      if (t.exponent[base + i] > 0) prod = prod * power(i, t.exponent[base + i]);
    out += prod;
  }
  return out;
}

namespace {

Poly cofactor_det(const std::vector<std::vector<Poly>>& a, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = a.size();
  if (row == n) return Poly::constant(a[0][0].ring_ptr(), 1, a[0][0].order());
  Poly sum(a[0][0].ring_ptr(), a[0][0].order());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t col = cols[k];
    if (!a[row][col].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      Poly minor = cofactor_det(a, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
      if (sign > 0)
        sum += a[row][col] * minor;
      else
        sum -= a[row][col] * minor;
    }
    sign = -sign;
  }
  return sum;
}

}  // namespace

Poly determinant(const std::vector<std::vector<Poly>>& rows) {
  if (rows.empty()) throw DomainError("determinant of an empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw DomainError("determinant needs a square matrix");
  for (const auto& r : rows)
    for (const auto& e : r)
      if (!same_ring(e.ring_ptr(), rows[0][0].ring_ptr())) throw ArityMismatch("matrix entries live in different rings");
  std::vector<std::size_t> cols(rows.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_det(rows, cols, 0);
}

}  // namespace staircase
