#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "staircase/diagram.hpp"
#include "staircase/ideal.hpp"
#include "staircase/parallel.hpp"
#include "staircase/standard_basis.hpp"

namespace staircase {

/// Row-echelon form of (I + M_N)/M_N inside the span of monomials with
/// weighted length < N, where M_N is spanned by the monomials of length ≥ N.
///
/// Pivots sit on the order-minimal column of each row and are normalized
/// to 1, so the pivot set is exactly N(I) ∩ {L(β) < N}.
class TruncationBasis {
 public:
  TruncationBasis(const Ideal& ideal, std::uint64_t N, const OrderSpec& ord = {});

  std::uint64_t truncation() const { return N_; }
  const OrderSpec& order() const { return order_; }
  /// Column labels, ascending in the order.
  const std::vector<Exponent>& monomials() const { return monomials_; }
  /// Pivot columns, ascending.
  std::vector<std::size_t> pivot_columns() const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t rows_processed() const { return rows_processed_; }

  DiagramSlice slice() const;

  /// Whether f lies in I + M_N.
  bool contains(const Poly& f) const;

 private:
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
  SparseRow row_of(const Poly& f) const;
  /// Reduces `row` against the pivots; returns the nonzero remainder or an empty row.
  SparseRow reduce(SparseRow row) const;
  void insert_row(SparseRow row);

  std::uint64_t N_;
  OrderSpec order_;
  std::size_t arity_;
  std::vector<Exponent> monomials_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> column_of_;
  std::unordered_map<std::size_t, SparseRow> pivots_;
  std::size_t rows_processed_ = 0;
};

/// N(I·K{x}) on {L(β) < N}, certified, with length_bound N − 1.
DiagramSlice truncated_diagram(const Ideal& ideal, std::uint64_t N, const OrderSpec& ord = {});

/// H_I(N − 1): exponents of length < N outside the diagram.
std::uint64_t truncated_quotient_dim(const Ideal& ideal, std::uint64_t N, const OrderSpec& ord = {});

struct CrossCheckReport {
  bool agree = false;
  std::optional<Exponent> first_difference;
  Diagram standard_basis_diagram;
  DiagramSlice oracle_slice;
};

/// Runs both engines and compares them below N.
CrossCheckReport oracle_cross_check(const Ideal& ideal, std::uint64_t N, const OrderSpec& ord = {},
                                    const StandardBasisOptions& opts = {});

/// oracle_cross_check on every ideal, results in input order.
std::vector<CrossCheckReport> batch_cross_check(std::span<const Ideal> ideals, std::uint64_t N,
                                                const OrderSpec& ord = {}, const StandardBasisOptions& opts = {},
                                                Execution exec = Execution::Parallel);

}  // namespace staircase
