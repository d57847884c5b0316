#include "staircase/poly.hpp"

#include <algorithm>
#include <sstream>

#include "staircase/error.hpp"

namespace staircase {

Poly::Poly(RingPtr ring, OrderSpec order) : ring_(std::move(ring)), order_(std::move(order)) {
  if (!ring_) throw DomainError("polynomial without a ring");
  order_.check_arity(ring_->arity());
}

Poly Poly::constant(RingPtr ring, const Rational& c, OrderSpec order) {
  const auto m = ring->arity();
  return monomial(std::move(ring), Exponent(m), c, std::move(order));
}

Poly Poly::monomial(RingPtr ring, Exponent e, const Rational& c, OrderSpec order) {
  Poly p(std::move(ring), std::move(order));
  if (e.size() != p.arity()) throw ArityMismatch("monomial arity does not match ring");
  if (c != 0) p.terms_.push_back({c, std::move(e)});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index, OrderSpec order) {
  const auto m = ring->arity();
  if (index >= m) throw DomainError("variable index out of range");
  return monomial(std::move(ring), Exponent::axis(m, index), 1, std::move(order));
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms, OrderSpec order) {
  Poly p(std::move(ring), std::move(order));
  for (const auto& t : terms)
    if (t.exponent.size() != p.arity()) throw ArityMismatch("term arity does not match ring");
  const OrderSpec& ord = p.order_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.less(a.exponent, b.exponent); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

const Term& Poly::initial_term() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no initial term");
  return terms_.front();
}

std::uint64_t Poly::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponent.length());
  return d;
}

Rational Poly::coefficient(const Exponent& e) const {
  for (const auto& t : terms_)
    if (t.exponent == e) return t.coefficient;
  return 0;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().exponent.is_zero()) return terms_.front().coefficient;
  // The zero exponent is the minimum of every order, so it can only be first.
  return 0;
}

Poly Poly::with_order(const OrderSpec& order) const {
  if (order == order_) return *this;
  return from_terms(ring_, terms_, order);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

void Poly::check_compatible(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) throw ArityMismatch("polynomials live in different rings");
}

void Poly::merge(const Poly& o, bool subtract) {
  check_compatible(o);
  const Poly* rhs = &o;
  Poly resorted(ring_);
  if (!(o.order_ == order_)) {
    resorted = o.with_order(order_);
    rhs = &resorted;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs->terms_.size());
  auto a = terms_.begin();
  auto b = rhs->terms_.begin();
  while (a != terms_.end() || b != rhs->terms_.end()) {
    if (b == rhs->terms_.end() || (a != terms_.end() && order_.less(a->exponent, b->exponent))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || order_.less(b->exponent, a->exponent)) {
      out.push_back(*b++);
      if (subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational c = subtract ? Rational(a->coefficient - b->coefficient) : Rational(a->coefficient + b->coefficient);
      if (c != 0) out.push_back({std::move(c), std::move(a->exponent)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  merge(o, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  merge(o, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_, a.order_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.coefficient * t.coefficient, s.exponent + t.exponent});
  return Poly::from_terms(a.ring_, std::move(prod), a.order_);
}

Poly Poly::mul_term(const Rational& c, const Exponent& shift) const {
  Poly r(ring_, order_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Shifting preserves the order, so the result is already sorted.
  for (const auto& t : terms_) r.terms_.push_back({c * t.coefficient, t.exponent + shift});
  return r;
}

void Poly::sub_mul_term(const Rational& c, const Exponent& shift, const Poly& g) {
  check_compatible(g);
  if (!(g.order_ == order_)) {
    *this -= g.mul_term(c, shift);
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Exponent shifted;
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b != g.terms_.end()) shifted = b->exponent + shift;
    if (b == g.terms_.end() || (a != terms_.end() && order_.less(a->exponent, shifted))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || order_.less(shifted, a->exponent)) {
      out.push_back({-c * b->coefficient, std::move(shifted)});
      ++b;
    } else {
      Rational v = a->coefficient - c * b->coefficient;
      if (v != 0) out.push_back({std::move(v), std::move(a->exponent)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Poly Poly::truncate_below(std::uint64_t bound, const OrderSpec& ord) const {
  Poly r(ring_, order_);
  for (const auto& t : terms_)
    if (ord.length(t.exponent) < bound) r.terms_.push_back(t);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < t.exponent.size(); ++i) {
      if (t.exponent[i] == 0) continue;
      mono << (any ? "*" : "") << ring_->variable(i);
      if (t.exponent[i] > 1) mono << '^' << t.exponent[i];
      any = true;
    }
    if (!any)
      os << format_rational(c);
    else if (c == 1)
      os << mono.str();
    else
      os << format_rational(c) << '*' << mono.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Exponent initial_exponent(const Poly& f, const OrderSpec& ord) { return initial_term(f, ord).exponent; }

Term initial_term(const Poly& f, const OrderSpec& ord) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no initial term");
  if (ord == f.order()) return f.initial_term();
  ord.check_arity(f.arity());
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (ord.less(t.exponent, best->exponent)) best = &t;
  return *best;
}

Poly jet(const Poly& f, std::uint64_t mu) { return f.truncate_below(mu + 1, OrderSpec{}); }

std::uint64_t ecart(const Poly& f, const OrderSpec& ord) {
  return f.degree() - initial_exponent(f, ord).length();
}

Poly evaluate_base_zero(const Poly& f) {
  const std::size_t n = f.ring().base_split();
  if (n == 0) throw DomainError("evaluation at y = 0 needs declared base variables");
  RingPtr target = fibre_ring(f.ring_ptr());
  std::vector<std::uint32_t> weights;
  if (!f.order().is_unit())
    weights.assign(f.order().weights().begin() + static_cast<std::ptrdiff_t>(n), f.order().weights().end());
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    bool base_free = true;
    for (std::size_t i = 0; i < n; ++i) base_free = base_free && t.exponent[i] == 0;
    if (!base_free) continue;
    std::vector<Exponent::value_type> xs(t.exponent.begin() + static_cast<std::ptrdiff_t>(n), t.exponent.end());
    out.push_back({t.coefficient, Exponent(std::move(xs))});
  }
  return Poly::from_terms(std::move(target), std::move(out), OrderSpec(std::move(weights)));
}

Poly lift_to_base(const Poly& f, const RingPtr& target) {
  const std::size_t n = target->base_split();
  if (f.arity() + n != target->arity()) throw ArityMismatch("target ring does not extend the polynomial's ring");
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (f.ring().variable(i) != target->variable(n + i)) throw ArityMismatch("target ring renames fibre variables");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::vector<Exponent::value_type> e(n, 0);
    e.insert(e.end(), t.exponent.begin(), t.exponent.end());
    out.push_back({t.coefficient, Exponent(std::move(e))});
  }
  return Poly::from_terms(target, std::move(out));
}

Poly primitive_part(const Poly& f) {
  if (f.is_zero()) return f;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.initial_term().coefficient < 0) scale = -scale;
  return f * scale;
}

}  // namespace staircase
