#include "staircase/jet_oracle.hpp"

#include <algorithm>

#include "staircase/error.hpp"

namespace staircase {

TruncationBasis::TruncationBasis(const Ideal& ideal, std::uint64_t N, const OrderSpec& ord)
    : N_(N), order_(ord), arity_(ideal.arity()) {
  if (N == 0) throw DomainError("truncation order must be at least 1");
  ord.check_arity(arity_);
  monomials_ = exponents_upto(arity_, N - 1, ord);
  for (std::size_t i = 0; i < monomials_.size(); ++i) column_of_.emplace(monomials_[i], i);

  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    const Exponent lead = initial_exponent(g, ord);
    const std::uint64_t lead_len = ord.length(lead);
    if (lead_len >= N) continue;
    // Shifts with L(γ) + L(inexp g) ≥ N land entirely in M_N.
    for (const auto& gamma : exponents_upto(arity_, N - 1 - lead_len, ord)) {
      insert_row(row_of(g.mul_term(1, gamma)));
      ++rows_processed_;
      if (pivots_.size() == monomials_.size()) return;
    }
  }
}

TruncationBasis::SparseRow TruncationBasis::row_of(const Poly& f) const {
  SparseRow row;
  for (const auto& t : f.terms()) {
    if (order_.length(t.exponent) >= N_) continue;
    row.emplace_back(column_of_.at(t.exponent), t.coefficient);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

TruncationBasis::SparseRow TruncationBasis::reduce(SparseRow row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) return row;
    // row −= row[lead] · pivot (pivot has leading coefficient 1).
    const SparseRow& piv = it->second;
    const Rational c = row.front().second;
    SparseRow out;
    out.reserve(row.size() + piv.size());
    auto a = row.begin() + 1;
    auto b = piv.begin() + 1;
    while (a != row.end() || b != piv.end()) {
      if (b == piv.end() || (a != row.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == row.end() || b->first < a->first) {
        out.emplace_back(b->first, -c * b->second);
        ++b;
      } else {
        Rational v = a->second - c * b->second;
        if (v != 0) out.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    row = std::move(out);
  }
  return row;
}

void TruncationBasis::insert_row(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return;
  const Rational inv = 1 / row.front().second;
  for (auto& [col, v] : row) v *= inv;
  const std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
}

bool TruncationBasis::contains(const Poly& f) const {
  if (f.arity() != arity_) throw ArityMismatch("polynomial arity does not match truncation basis");
  return reduce(row_of(f)).empty();
}

std::vector<std::size_t> TruncationBasis::pivot_columns() const {
  std::vector<std::size_t> cols;
  cols.reserve(pivots_.size());
  for (const auto& [c, row] : pivots_) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  return cols;
}

DiagramSlice TruncationBasis::slice() const {
  std::vector<Exponent> leads;
  for (auto c : pivot_columns()) leads.push_back(monomials_[c]);
  return DiagramSlice{Diagram::from_exponents(arity_, leads), N_ - 1, true, order_};
}

DiagramSlice truncated_diagram(const Ideal& ideal, std::uint64_t N, const OrderSpec& ord) {
  return TruncationBasis(ideal, N, ord).slice();
}

std::uint64_t truncated_quotient_dim(const Ideal& ideal, std::uint64_t N, const OrderSpec& ord) {
  TruncationBasis tb(ideal, N, ord);
  return tb.monomials().size() - tb.rank();
}

CrossCheckReport oracle_cross_check(const Ideal& ideal, std::uint64_t N, const OrderSpec& ord,
                                    const StandardBasisOptions& opts) {
  CrossCheckReport rep{false, std::nullopt, diagram_of_ideal(ideal, ord, opts), truncated_diagram(ideal, N, ord)};
  rep.first_difference = first_difference(rep.standard_basis_diagram, rep.oracle_slice.diagram, N - 1, ord);
  rep.agree = !rep.first_difference.has_value();
  return rep;
}

std::vector<CrossCheckReport> batch_cross_check(std::span<const Ideal> ideals, std::uint64_t N, const OrderSpec& ord,
                                                const StandardBasisOptions& opts, Execution exec) {
  return map_indexed(
      ideals.size(), [&](std::size_t i) { return oracle_cross_check(ideals[i], N, ord, opts); }, exec);
}

}  // namespace staircase
