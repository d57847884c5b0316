#include "staircase/diagram.hpp"

#include <algorithm>

#include "staircase/error.hpp"

namespace staircase {

Diagram Diagram::from_exponents(std::size_t arity, std::span<const Exponent> exps) {
  for (const auto& e : exps)
    if (e.size() != arity) throw ArityMismatch("diagram exponents of mixed arity");
  std::vector<Exponent> sorted(exps.begin(), exps.end());
  const OrderSpec unit;
  // Ascending degree means a divisor is always seen before its multiples.
  std::sort(sorted.begin(), sorted.end(), OrderLess{&unit});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Diagram d(arity);
  for (auto& e : sorted) {
    const bool covered =
        std::any_of(d.vertices_.begin(), d.vertices_.end(), [&](const Exponent& v) { return v.divides(e); });
    if (!covered) d.vertices_.push_back(std::move(e));
  }
  return d;
}

bool Diagram::contains(const Exponent& b) const {
  if (b.size() != arity_) throw ArityMismatch("query exponent arity does not match diagram");
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const Exponent& v) { return v.divides(b); });
}

bool Diagram::is_subset_of(const Diagram& other) const {
  if (other.arity_ != arity_) throw ArityMismatch("diagrams of different arity");
  return std::all_of(vertices_.begin(), vertices_.end(), [&](const Exponent& v) { return other.contains(v); });
}

std::optional<bool> DiagramSlice::contains(const Exponent& b) const {
  if (order.length(b) > length_bound) return std::nullopt;
  return diagram.contains(b);
}

std::vector<Exponent> complement_upto(const Diagram& d, std::uint64_t l) {
  std::vector<Exponent> out;
  for (auto& e : exponents_upto(d.arity(), l))
    if (!d.contains(e)) out.push_back(std::move(e));
  return out;
}

std::uint64_t hilbert_samuel(const Diagram& d, std::uint64_t k) {
  std::uint64_t n = 0;
  for (const auto& e : exponents_upto(d.arity(), k))
    if (!d.contains(e)) ++n;
  return n;
}

namespace {

// Smallest set of variables meeting every support in `supports`.
int min_hitting_set(const std::vector<std::vector<std::size_t>>& supports, std::vector<bool>& chosen, int depth,
                    int best) {
  if (depth >= best) return best;
  const std::vector<std::size_t>* open = nullptr;
  for (const auto& s : supports) {
    const bool hit = std::any_of(s.begin(), s.end(), [&](std::size_t i) { return chosen[i]; });
    if (!hit && (!open || s.size() < open->size())) open = &s;
  }
  if (!open) return depth;
  for (std::size_t i : *open) {
    chosen[i] = true;
    best = min_hitting_set(supports, chosen, depth + 1, best);
    chosen[i] = false;
  }
  return best;
}

}  // namespace

int quotient_dimension(const Diagram& d) {
  const std::size_t m = d.arity();
  if (d.is_unit()) return -1;
  // dim K{x}/(x^v) = m − (minimum number of variables meeting every vertex support).
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& v : d.vertices()) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i)
      if (v[i] > 0) s.push_back(i);
    supports.push_back(std::move(s));
  }
  std::vector<bool> chosen(m, false);
  return static_cast<int>(m) - min_hitting_set(supports, chosen, 0, static_cast<int>(m) + 1);
}

bool equal_upto(const Diagram& a, const Diagram& b, std::uint64_t l, const OrderSpec& ord) {
  if (a.arity() != b.arity()) throw ArityMismatch("diagrams of different arity");
  // Every member of length ≤ l sits above a vertex of length ≤ l.
  auto covered = [&](const Diagram& x, const Diagram& y) {
    return std::all_of(x.vertices().begin(), x.vertices().end(),
                       [&](const Exponent& v) { return ord.length(v) > l || y.contains(v); });
  };
  return covered(a, b) && covered(b, a);
}

std::optional<Exponent> first_difference(const Diagram& a, const Diagram& b, std::uint64_t l, const OrderSpec& ord) {
  if (a.arity() != b.arity()) throw ArityMismatch("diagrams of different arity");
  if (equal_upto(a, b, l, ord)) return std::nullopt;
  for (auto& e : exponents_upto(a.arity(), l, ord))
    if (a.contains(e) != b.contains(e)) return e;
  return std::nullopt;
}

std::uint64_t max_vertex_length(const Diagram& d) {
  if (d.empty()) throw DomainError("the empty diagram has no vertices");
  std::uint64_t l = 0;
  for (const auto& v : d.vertices()) l = std::max(l, v.length());
  return l;
}

namespace {

// Pure-power exponents a_i per axis, when every axis carries one.
std::optional<std::vector<std::uint32_t>> axis_box(const Diagram& d) {
  std::vector<std::uint32_t> box(d.arity(), 0);
  for (const auto& v : d.vertices()) {
    if (v.is_zero()) return std::vector<std::uint32_t>(d.arity(), 0);
    const int axis = v.pure_axis();
    if (axis >= 0) box[static_cast<std::size_t>(axis)] = v[static_cast<std::size_t>(axis)];
  }
  if (std::any_of(box.begin(), box.end(), [](auto a) { return a == 0; })) return std::nullopt;
  return box;
}

template <class F>
void for_each_in_box(const std::vector<std::uint32_t>& box, F&& f) {
  if (std::any_of(box.begin(), box.end(), [](auto a) { return a == 0; })) return;
  Exponent e(box.size());
  for (;;) {
    f(e);
    std::size_t i = 0;
    while (i < box.size() && ++e[i] == box[i]) e[i++] = 0;
    if (i == box.size()) return;
  }
}

}  // namespace

std::optional<std::uint64_t> power_of_maximal(const Diagram& d, const OrderSpec& ord) {
  auto box = axis_box(d);
  if (!box) return std::nullopt;
  ord.check_arity(d.arity());
  std::uint64_t k = 0;
  for_each_in_box(*box, [&](const Exponent& e) {
    if (!d.contains(e)) k = std::max(k, ord.length(e) + 1);
  });
  return k;
}

std::optional<std::uint64_t> complement_size(const Diagram& d) {
  auto box = axis_box(d);
  if (!box) return std::nullopt;
  std::uint64_t n = 0;
  for_each_in_box(*box, [&](const Exponent& e) {
    if (!d.contains(e)) ++n;
  });
  return n;
}

std::vector<Exponent> axis_vertices(const Diagram& d) {
  std::vector<Exponent> out;
  for (const auto& v : d.vertices())
    if (v.pure_axis() >= 0) out.push_back(v);
  return out;
}

}  // namespace staircase
