#include "staircase/exponent.hpp"

#include <algorithm>
#include <sstream>

#include "staircase/error.hpp"
#include "staircase/order.hpp"

namespace staircase {

Exponent Exponent::axis(std::size_t arity, std::size_t i, value_type power) {
  Exponent e(arity);
  e.e_.at(i) = power;
  return e;
}

std::uint64_t Exponent::length() const {
  std::uint64_t s = 0;
  for (auto v : e_) s += v;
  return s;
}

bool Exponent::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

bool Exponent::divides(const Exponent& other) const {
  if (e_.size() != other.e_.size()) throw ArityMismatch("exponent arity mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

int Exponent::pure_axis() const {
  int axis = -1;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (axis >= 0) return -1;
    axis = static_cast<int>(i);
  }
  return axis;
}

Exponent& Exponent::operator+=(const Exponent& o) {
  if (e_.size() != o.e_.size()) throw ArityMismatch("exponent arity mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  if (!b.divides(a)) throw DomainError("exponent difference is not in ℕ^m");
  Exponent r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

std::string Exponent::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
  os << ')';
  return os.str();
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw ArityMismatch("exponent arity mismatch");
  Exponent r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : e) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------

OrderSpec::OrderSpec(std::vector<std::uint32_t> weights) : weights_(std::move(weights)) {
  for (auto w : weights_)
    if (w == 0) throw DomainError("order weights must be positive");
  if (std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; })) weights_.clear();
}

void OrderSpec::check_arity(std::size_t arity) const {
  if (!weights_.empty() && weights_.size() != arity)
    throw ArityMismatch("order has " + std::to_string(weights_.size()) + " weights but ring has " +
                        std::to_string(arity) + " variables");
}

std::uint64_t OrderSpec::length(const Exponent& b) const {
  if (weights_.empty()) return b.length();
  check_arity(b.size());
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += std::uint64_t{weights_[i]} * b[i];
  return s;
}

std::strong_ordering OrderSpec::compare(const Exponent& a, const Exponent& b) const {
  if (a.size() != b.size()) throw ArityMismatch("cannot compare exponents of different arity");
  if (auto c = length(a) <=> length(b); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

void enumerate(const OrderSpec& ord, std::size_t pos, std::uint64_t budget, Exponent& cur,
               std::vector<Exponent>& out) {
  if (pos == cur.size()) {
    out.push_back(cur);
    return;
  }
  const std::uint64_t w = ord.weight(pos);
  for (std::uint64_t k = 0; k * w <= budget; ++k) {
    cur[pos] = static_cast<Exponent::value_type>(k);
    enumerate(ord, pos + 1, budget - k * w, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponent> exponents_upto(std::size_t arity, std::uint64_t bound, const OrderSpec& ord) {
  ord.check_arity(arity);
  std::vector<Exponent> out;
  Exponent cur(arity);
  enumerate(ord, 0, bound, cur, out);
  std::sort(out.begin(), out.end(), OrderLess{&ord});
  return out;
}

}  // namespace staircase
