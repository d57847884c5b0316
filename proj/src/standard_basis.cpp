#include "staircase/standard_basis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "staircase/error.hpp"

namespace staircase {

Ideal::Ideal(RingPtr r, std::vector<Poly> gens) : ring(std::move(r)), generators(std::move(gens)) {
  if (!ring) throw DomainError("ideal without a ring");
  for (const auto& g : generators)
    if (!same_ring(ring, g.ring_ptr())) throw ArityMismatch("ideal generators live in different rings");
}

Ideal::Ideal(std::vector<Poly> gens) : generators(std::move(gens)) {
  if (generators.empty()) throw DomainError("cannot infer the ring of an empty generator list");
  ring = generators.front().ring_ptr();
  for (const auto& g : generators)
    if (!same_ring(ring, g.ring_ptr())) throw ArityMismatch("ideal generators live in different rings");
}

namespace {

struct PoolEntry {
  Poly poly;
  Exponent lead;
  std::uint64_t ecart;
  std::size_t index;
  // h = unit·f + Σ coeffs_i·g_i, kept only when tracking.
  std::optional<Poly> unit;
  std::vector<Poly> coeffs;
};

PoolEntry make_entry(Poly p, std::size_t index) {
  Exponent lead = p.initial_exponent();
  const std::uint64_t e = p.degree() - lead.length();
  return PoolEntry{std::move(p), std::move(lead), e, index, std::nullopt, {}};
}

std::size_t coefficient_bits(const Poly& p) {
  std::size_t b = 0;
  for (const auto& t : p.terms())
    b = std::max(b, mpz_sizeinbase(t.coefficient.get_num_mpz_t(), 2) + mpz_sizeinbase(t.coefficient.get_den_mpz_t(), 2));
  return b;
}

// Checked every few steps; the bit count walks all of h.
void check_work(std::size_t steps, const Poly& h, std::size_t step_ceiling, std::size_t bits_ceiling) {
  if (steps >= step_ceiling)
    throw ResourceLimitExceeded("reduction exceeded step ceiling of " + std::to_string(step_ceiling));
  if (steps % 16 == 0 && coefficient_bits(h) > bits_ceiling)
    throw ResourceLimitExceeded("coefficients exceeded " + std::to_string(bits_ceiling) + " bits");
}

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g, const OrderSpec& ord) {
  const Poly a = f.with_order(ord);
  const Poly b = g.with_order(ord);
  const Term& ta = a.initial_term();
  const Term& tb = b.initial_term();
  const Exponent l = lcm(ta.exponent, tb.exponent);
  Poly s = a.mul_term(1 / ta.coefficient, l - ta.exponent);
  s.sub_mul_term(1 / tb.coefficient, l - tb.exponent, b);
  return s;
}

NormalFormResult mora_normal_form(const Poly& f, std::span<const Poly> reducers, const OrderSpec& ord,
                                  const NormalFormOptions& opts) {
  const RingPtr& ring = f.ring_ptr();
  ord.check_arity(ring->arity());
  std::vector<PoolEntry> pool;
  pool.reserve(reducers.size() + 8);
  for (std::size_t i = 0; i < reducers.size(); ++i) {
    if (reducers[i].is_zero()) throw DomainError("zero polynomial in reducer list");
    if (!same_ring(ring, reducers[i].ring_ptr())) throw ArityMismatch("reducer lives in a different ring");
    Poly r = reducers[i].with_order(ord);
    if (opts.corner) r = r.truncate_below(*opts.corner, ord);
    if (!r.is_zero()) pool.push_back(make_entry(std::move(r), i));
  }
  const bool track = opts.track_representation;
  const Poly zero(ring, ord);
  if (track) {
    for (auto& e : pool) {
      e.unit = zero;
      e.coeffs.assign(reducers.size(), zero);
      e.coeffs[e.index] = Poly::constant(ring, 1, ord);
    }
  }

  auto clip = [&](Poly& p) {
    if (opts.corner) p = p.truncate_below(*opts.corner, ord);
  };
  Poly h = f.with_order(ord);
  clip(h);
  Poly unit = Poly::constant(ring, 1, ord);
  std::vector<Poly> coeffs(track ? reducers.size() : 0, zero);
  NormalFormTrace trace;

  while (!h.is_zero()) {
    const Term lt = h.initial_term();
    const PoolEntry* best = nullptr;
    for (const auto& e : pool) {
      if (!e.lead.divides(lt.exponent)) continue;
      // Pool is scanned in index order, so strict comparisons keep the earliest.
      if (!best || e.ecart < best->ecart || (e.ecart == best->ecart && ord.less(e.lead, best->lead))) best = &e;
    }
    if (!best) break;

    const std::uint64_t h_ecart = h.degree() - lt.exponent.length();
    // Copy out before the pool may reallocate.
    const Poly reducer = best->poly;
    const Exponent shift = lt.exponent - best->lead;
    const Rational c = lt.coefficient / best->poly.initial_term().coefficient;
    std::optional<Poly> r_unit = best->unit;
    std::vector<Poly> r_coeffs = best->coeffs;

    if (best->ecart > h_ecart) {
      if (pool.size() >= opts.pool_ceiling)
        throw ResourceLimitExceeded("Mora reducer pool exceeded ceiling of " + std::to_string(opts.pool_ceiling));
      PoolEntry e = make_entry(h, reducers.size() + trace.pool_growth);
      if (track) {
        e.unit = unit;
        e.coeffs = coeffs;
      }
      pool.push_back(std::move(e));
      ++trace.pool_growth;
    }
    h.sub_mul_term(c, shift, reducer);
    clip(h);
    if (track) {
      unit.sub_mul_term(c, shift, *r_unit);
      for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i].sub_mul_term(c, shift, r_coeffs[i]);
    }
    ++trace.steps;
    check_work(trace.steps, h, opts.step_ceiling, opts.coefficient_bits_ceiling);
  }

  if (track) {
    trace.unit = unit;
    for (auto& q : coeffs) q = -q;
    trace.quotients = std::move(coeffs);
  }
  return {std::move(h), std::move(trace)};
}

namespace {

std::uint64_t weighted_degree(const Poly& p, const OrderSpec& ord) {
  std::uint64_t d = 0;
  for (const auto& t : p.terms()) d = std::max(d, ord.length(t.exponent));
  return d;
}

// When the initial monomial divides every term, p is that monomial times a
// unit and the monomial generates the same ideal of the local ring.
Poly strip_unit(Poly p) {
  if (p.is_zero()) return p;
  const Exponent lead = p.initial_exponent();
  for (const auto& t : p.terms())
    if (!lead.divides(t.exponent)) return p;
  return Poly::monomial(p.ring_ptr(), lead).with_order(p.order());
}

class BasisBuilder {
 public:
  BasisBuilder(std::size_t arity, const OrderSpec& ord, const StandardBasisOptions& opts, SBasis& sb)
      : arity_(arity), ord_(ord), opts_(opts), sb_(sb) {}

  // Returns true when a unit was found; g then ends with it.
  bool run_mora(std::vector<Poly>& g) {
    std::set<Pair, PairLess> pairs(PairLess{&ord_});
    auto add_pairs_for = [&](std::size_t j) {
      for (std::size_t i = 0; i < j; ++i)
        pairs.insert(Pair{lcm(g[i].initial_exponent(), g[j].initial_exponent()), 0, i, j});
    };
    for (std::size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

    NormalFormOptions nf_opts{opts_.pool_ceiling, false, corner_of(g), opts_.step_ceiling,
                              opts_.coefficient_bits_ceiling};
    while (!pairs.empty()) {
      const Pair p = *pairs.begin();
      pairs.erase(pairs.begin());
      const Poly s = s_polynomial(g[p.i], g[p.j], ord_);
      PairRecord rec{p.i, p.j, p.lcm, 0, 0, true};
      if (!s.is_zero()) {
        auto nf = mora_normal_form(s, g, ord_, nf_opts);
        rec.steps = nf.trace.steps;
        rec.pool_growth = nf.trace.pool_growth;
        if (!nf.remainder.is_zero()) {
          rec.reduced_to_zero = false;
          check_size(g.size());
          g.push_back(primitive_part(nf.remainder));
          if (g.back().initial_exponent().is_zero()) {
            sb_.trace.push_back(std::move(rec));
            return true;
          }
          add_pairs_for(g.size() - 1);
          if (auto k = corner_of(g)) nf_opts.corner = k;
        }
      }
      sb_.trace.push_back(std::move(rec));
    }
    return false;
  }

  // Mora reduction with one pool shared by all pairs. Work items are taken
  // by homogeneous degree; an item that could only be reduced by a reducer
  // of larger écart is put back in the queue while cheaper items remain.
  bool run_lazy(std::vector<Poly>& g) {
    std::vector<Poly> basis;
    // An element whose initial exponent is a multiple of another's keeps the
    // pairs it already has but takes part in no new ones.
    std::vector<bool> alive;
    std::set<Item, ItemLess> queue(ItemLess{&ord_});
    auto add_basis = [&](Poly p) {
      p = strip_unit(std::move(p));
      basis.push_back(p);
      add_reducer(std::move(p));
      const std::size_t j = basis.size() - 1;
      const Entry& ej = pool_.back();
      bool covered = false;
      for (std::size_t i = 0; i < j; ++i) {
        if (!alive[i]) continue;
        const Entry& ei = pool_[basis_slot_[i]];
        if (ei.lead.divides(ej.lead))
          covered = true;
        else if (ej.lead.divides(ei.lead))
          alive[i] = false;
        // Coprime initial monomials only settle the pair when one écart is 0.
        if (std::min(ei.ecart, ej.ecart) == 0 && coprime(ei.lead, ej.lead)) continue;
        Exponent l = lcm(ei.lead, ej.lead);
        const std::uint64_t deg = ord_.length(l) + std::max(ei.ecart, ej.ecart);
        queue.insert(Item{deg, std::move(l), seq_++, i, j, std::nullopt});
      }
      alive.push_back(!covered);
      basis_slot_.push_back(pool_.size() - 1);
    };
    std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
      return ord_.less(a.initial_exponent(), b.initial_exponent());
    });
    for (auto& p : g) add_basis(std::move(p));
    corner_ = corner_of(basis);

    while (!queue.empty()) {
      Item item = std::move(queue.extract(queue.begin()).value());
      PairRecord rec{item.i, item.j, item.lcm, 0, 0, true};
      Poly h = item.poly ? std::move(*item.poly) : s_polynomial(basis[item.i], basis[item.j], ord_);
      clip(h);
      while (!h.is_zero()) {
        const Term lt = h.initial_term();
        const std::uint64_t h_deg = weighted_degree(h, ord_);
        const std::uint64_t h_ecart = h_deg - ord_.length(lt.exponent);
        const Entry* best = nullptr;
        for (const auto& e : pool_) {
          if (!e.lead.divides(lt.exponent)) continue;
          if (!best || e.ecart < best->ecart || (e.ecart == best->ecart && ord_.less(e.lead, best->lead))) best = &e;
        }
        if (!best) break;
        const Poly reducer = best->p;
        const Exponent shift = lt.exponent - best->lead;
        const Rational c = lt.coefficient / best->p.initial_term().coefficient;
        if (best->ecart > h_ecart) {
          if (!queue.empty() && strictly_before(*queue.begin(), h_deg, lt.exponent)) {
            rec.deferred = true;
            queue.insert(Item{h_deg, lt.exponent, seq_++, item.i, item.j, primitive_part(h)});
            break;
          }
          add_reducer(primitive_part(h));
          ++rec.pool_growth;
        }
        h.sub_mul_term(c, shift, reducer);
        clip(h);
        h = strip_unit(std::move(h));
        if (!h.is_zero()) h = primitive_part(h);
        ++rec.steps;
        check_work(++steps_, h, opts_.step_ceiling, opts_.coefficient_bits_ceiling);
      }
      if (!rec.deferred && !h.is_zero()) {
        rec.reduced_to_zero = false;
        check_size(basis.size());
        add_basis(primitive_part(h));
        if (basis.back().initial_exponent().is_zero()) {
          sb_.trace.push_back(std::move(rec));
          g = std::move(basis);
          return true;
        }
        if (auto k = corner_of(basis)) corner_ = k;
      }
      if (!rec.deferred || rec.steps > 0) sb_.trace.push_back(std::move(rec));
    }
    g = std::move(basis);
    return false;
  }

 private:
  struct Pair {
    Exponent lcm;
    std::uint64_t deg;
    std::size_t i, j;
  };
  struct PairLess {
    const OrderSpec* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (auto c = ord->compare(a.lcm, b.lcm); c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    }
  };
  // An s-pair still to be formed, or a partly reduced polynomial.
  struct Item {
    std::uint64_t deg;
    Exponent lcm;
    std::size_t seq;
    std::size_t i, j;
    std::optional<Poly> poly;
  };
  struct ItemLess {
    const OrderSpec* ord;
    bool operator()(const Item& a, const Item& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      if (auto c = ord->compare(a.lcm, b.lcm); c != 0) return c < 0;
      return a.seq < b.seq;
    }
  };
  struct Entry {
    Poly p;
    Exponent lead;
    std::uint64_t ecart;
  };

  // Ties do not count, so two equal items cannot keep yielding to each other.
  bool strictly_before(const Item& a, std::uint64_t deg, const Exponent& lead) const {
    return a.deg < deg || (a.deg == deg && ord_.less(a.lcm, lead));
  }

  static bool coprime(const Exponent& a, const Exponent& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != 0 && b[k] != 0) return false;
    return true;
  }

  void check_size(std::size_t n) const {
    if (n >= opts_.pool_ceiling)
      throw ResourceLimitExceeded("standard basis exceeded ceiling of " + std::to_string(opts_.pool_ceiling));
  }

  void add_reducer(Poly p) {
    p = strip_unit(std::move(p));
    if (pool_.size() >= opts_.pool_ceiling)
      throw ResourceLimitExceeded("reducer pool exceeded ceiling of " + std::to_string(opts_.pool_ceiling));
    Exponent lead = p.initial_exponent();
    const std::uint64_t e = weighted_degree(p, ord_) - ord_.length(lead);
    pool_.push_back(Entry{std::move(p), std::move(lead), e});
  }

  // Once the initial exponents cover every exponent of length ≥ k, the ideal
  // contains all of them and longer terms can be dropped.
  std::optional<std::uint64_t> corner_of(const std::vector<Poly>& elems) const {
    std::vector<Exponent> leads;
    for (const auto& e : elems) leads.push_back(e.initial_exponent());
    return power_of_maximal(Diagram::from_exponents(arity_, leads), ord_);
  }

  void clip(Poly& p) const {
    if (corner_) p = p.truncate_below(*corner_, ord_);
  }

  std::size_t arity_;
  const OrderSpec& ord_;
  const StandardBasisOptions& opts_;
  SBasis& sb_;
  std::optional<std::uint64_t> corner_;
  std::vector<Entry> pool_;
  std::vector<std::size_t> basis_slot_;
  std::size_t seq_ = 0;
  std::size_t steps_ = 0;
};

}  // namespace

SBasis standard_basis(const Ideal& ideal, const OrderSpec& ord, const StandardBasisOptions& opts) {
  ord.check_arity(ideal.arity());
  SBasis sb{ideal.generators, {}, Diagram(ideal.arity()), ord, {}};

  std::vector<Poly> g;
  for (const auto& p : ideal.generators)
    if (!p.is_zero()) g.push_back(primitive_part(p.with_order(ord)));

  auto unit_found = [&] {
    return std::find_if(g.begin(), g.end(), [](const Poly& p) { return p.initial_exponent().is_zero(); });
  };
  if (auto u = unit_found(); u != g.end()) {
    sb.basis = {*u};
    sb.diagram = Diagram::from_exponents(ideal.arity(), std::vector<Exponent>{u->initial_exponent()});
    return sb;
  }

  BasisBuilder builder(ideal.arity(), ord, opts, sb);
  const bool unit_ideal =
      opts.engine == BasisEngine::Mora ? builder.run_mora(g) : builder.run_lazy(g);

  if (unit_ideal) {
    sb.basis = {g.back()};
  } else {
    // Drop elements whose initial exponent is a multiple of another's.
    for (std::size_t k = 0; k < g.size(); ++k) {
      const Exponent& lk = g[k].initial_exponent();
      bool redundant = false;
      for (std::size_t i = 0; i < g.size() && !redundant; ++i) {
        if (i == k) continue;
        const Exponent& li = g[i].initial_exponent();
        redundant = li.divides(lk) && (li != lk || i < k);
      }
      if (!redundant) sb.basis.push_back(g[k]);
    }
  }
  std::vector<Exponent> leads;
  for (const auto& b : sb.basis) leads.push_back(b.initial_exponent());
  sb.diagram = Diagram::from_exponents(ideal.arity(), leads);
  return sb;
}

Diagram diagram_of_ideal(const Ideal& ideal, const OrderSpec& ord, const StandardBasisOptions& opts) {
  return standard_basis(ideal, ord, opts).diagram;
}

std::string format_trace(const SBasis& sb) {
  std::ostringstream os;
  for (const auto& r : sb.trace) {
    os << "pair " << r.first << ',' << r.second << " lcm " << r.lcm.to_string() << " steps " << r.steps
       << " pool+" << r.pool_growth << (r.deferred ? " -> later" : r.reduced_to_zero ? " -> 0" : " -> new") << '\n';
  }
  return os.str();
}

}  // namespace staircase
