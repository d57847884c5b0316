#include "staircase/determinacy.hpp"

#include <algorithm>
#include <random>

#include "staircase/error.hpp"
#include "staircase/jet_oracle.hpp"
#include "staircase/linear.hpp"
#include "staircase/random.hpp"

namespace staircase {

namespace {

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

std::vector<Poly> jets_keeping_zeros(const std::vector<Poly>& fs, std::uint64_t mu) {
  std::vector<Poly> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(jet(f, mu));
  return out;
}

std::vector<Poly> perturb(const RingPtr& ring, const std::vector<Poly>& fs, std::uint64_t mu, std::mt19937_64& rng) {
  std::vector<Poly> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f + random_poly(ring, mu + 1, mu + 3, 3, 5, rng));
  return out;
}

Verdict decided(bool yes, std::string reason) {
  Verdict v;
  v.kind = yes ? VerdictKind::CertifiedYes : VerdictKind::CertifiedNo;
  v.reason = std::move(reason);
  return v;
}

RingPtr ring_of(std::span<const Germ> gens) {
  if (gens.empty()) throw DomainError("at least one generator is needed to fix the ring");
  return gens.front().ring_ptr();
}

}  // namespace

MapSpec::MapSpec(RingPtr r, std::vector<Poly> rels, std::vector<Poly> comps)
    : ring(std::move(r)), relations(std::move(rels)), components(std::move(comps)) {
  if (!ring) throw DomainError("map without a ring");
  if (relations.empty() && components.empty()) throw DomainError("a map needs at least one relation or component");
  for (const auto* list : {&relations, &components})
    for (const auto& f : *list) {
      if (!same_ring(ring, f.ring_ptr())) throw ArityMismatch("map polynomial lives in a different ring");
      if (f.constant_term() != 0) throw DomainError("map polynomial " + f.to_string() + " does not vanish at 0");
    }
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedYes: return "CertifiedYes";
    case VerdictKind::CertifiedNo: return "CertifiedNo";
    case VerdictKind::UnknownAtBound: return "UnknownAtBound";
  }
  return "?";
}

std::string to_string(BoundScope s) {
  return s == BoundScope::FullEquivalence ? "full equivalence" : "forward direction only";
}

std::string to_string(PerturbedProperty p) {
  switch (p) {
    case PerturbedProperty::RegularSequence: return "regseq";
    case PerturbedProperty::FlatCi: return "flat-ci";
    case PerturbedProperty::FibreDiagram: return "fibre-diagram";
  }
  return "?";
}

std::vector<Poly> jet_ideal(std::span<const Poly> gens, std::uint64_t mu) {
  std::vector<Poly> out;
  for (const auto& g : gens) {
    Poly j = jet(g, mu);
    if (!j.is_zero()) out.push_back(std::move(j));
  }
  return out;
}

std::vector<Poly> jet_ideal(std::span<const Germ> gens, std::uint64_t mu) {
  std::vector<Poly> out;
  for (const auto& g : gens) {
    Poly j = g.jet(mu);
    if (!j.is_zero()) out.push_back(std::move(j));
  }
  return out;
}

Verdict regular_sequence(const Ideal& ideal, const StandardBasisOptions& opts) {
  const auto m = static_cast<int>(ideal.arity());
  const auto s = static_cast<int>(ideal.size());
  if (s > m) return decided(false, "more generators than variables");
  const Diagram d = diagram_of_ideal(ideal, {}, opts);
  if (d.is_unit()) return decided(false, "unit ideal");
  const int dim = quotient_dimension(d);
  Verdict v = decided(dim == m - s, "dim " + std::to_string(dim) + (dim == m - s ? " == " : " != ") +
                                        std::to_string(m - s));
  v.dimension = dim;
  v.expected_dimension = m - s;
  v.diagram = d;
  return v;
}

Verdict regseq_axis_certificate(const Ideal& ideal, std::size_t trials, std::uint64_t seed, std::uint64_t bound,
                                std::int64_t coord_bound) {
  if (trials == 0) throw DomainError("at least one trial is needed");
  const std::size_t m = ideal.arity();
  const std::size_t s = ideal.size();
  Verdict v;
  v.bound = bound;
  v.seed = seed;
  if (s > m) {
    v.reason = "more generators than variables";
    return v;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const CoordChange c = CoordChange::random(m, coord_bound, rng);
    std::vector<Poly> moved;
    for (const auto& g : ideal.generators) moved.push_back(apply_coord_change(g, c));
    const DiagramSlice slice = truncated_diagram(Ideal(ideal.ring, moved), bound + 1);
    if (slice.diagram.is_unit()) {
      Verdict no = decided(false, "unit ideal");
      no.bound = bound;
      no.seed = seed;
      return no;
    }
    // Shortest vertex per axis, then the s shortest axes.
    std::vector<std::optional<Exponent>> per_axis(m);
    for (const auto& e : axis_vertices(slice.diagram)) {
      const auto a = static_cast<std::size_t>(e.pure_axis());
      if (!per_axis[a] || e.length() < per_axis[a]->length()) per_axis[a] = e;
    }
    std::vector<Exponent> found;
    for (const auto& e : per_axis)
      if (e) found.push_back(*e);
    if (found.size() < s) continue;
    std::stable_sort(found.begin(), found.end(),
                     [](const Exponent& a, const Exponent& b) { return a.length() < b.length(); });
    found.resize(s);
    v.kind = VerdictKind::CertifiedYes;
    v.axis_vertices = std::move(found);
    v.trial = t;
    v.diagram = slice.diagram;
    std::uint64_t longest = 0;
    for (const auto& e : v.axis_vertices) longest = std::max(longest, e.length());
    v.reason = "pure-power vertices on " + std::to_string(s) + " axes, max length " + std::to_string(longest);
    return v;
  }
  v.reason = "no axis certificate within bound " + std::to_string(bound) + " after " + std::to_string(trials) +
             " trials";
  return v;
}

Ideal fibre_ideal(const MapSpec& m) {
  std::vector<Poly> gens = m.relations;
  if (m.components.empty()) return Ideal(m.ring, std::move(gens));
  const RingPtr graph = with_base_variables(m.ring, m.components.size());
  for (std::size_t j = 0; j < m.components.size(); ++j) {
    const Poly y = Poly::variable(graph, j);
    const Poly g = y - lift_to_base(m.components[j], graph);
    gens.push_back(-evaluate_base_zero(g));
  }
  for (auto& g : gens) g = Poly::from_terms(m.ring, {g.terms().begin(), g.terms().end()});
  return Ideal(m.ring, std::move(gens));
}

Verdict flat_ci(const MapSpec& m, const StandardBasisOptions& opts) {
  if (!m.relations.empty() && !regular_sequence(Ideal(m.ring, m.relations), opts).yes())
    throw DomainError("source not a certified complete intersection");
  const int expected = static_cast<int>(m.arity()) - static_cast<int>(m.relations.size()) -
                       static_cast<int>(m.components.size());
  if (expected < 0) {
    Verdict v = decided(false, "target dimension exceeds source dimension");
    v.expected_dimension = expected;
    return v;
  }
  const Diagram d = diagram_of_ideal(fibre_ideal(m), {}, opts);
  const int dim = quotient_dimension(d);
  Verdict v = decided(dim == expected, "fibre dim " + std::to_string(dim) + (dim == expected ? " == " : " != ") +
                                           std::to_string(expected));
  v.dimension = dim;
  v.expected_dimension = expected;
  v.diagram = d;
  return v;
}

std::optional<std::uint64_t> milnor_mu0(const MapSpec& m, const StandardBasisOptions& opts) {
  const Diagram d = diagram_of_ideal(fibre_ideal(m), {}, opts);
  if (quotient_dimension(d) != 0) return std::nullopt;
  return complement_size(d);
}

DeterminacyBound determinacy_bound(const MapSpec& m, std::size_t trials, std::uint64_t seed,
                                   std::uint64_t search_bound, const StandardBasisOptions& opts) {
  if (auto mu0 = milnor_mu0(m, opts)) return {*mu0, BoundScope::FullEquivalence, std::nullopt};
  Verdict flat;
  try {
    flat = flat_ci(m, opts);
  } catch (const DomainError&) {
    throw DomainError("no certified bound available");
  }
  if (!flat.yes()) throw DomainError("no certified bound available");
  Verdict cert = regseq_axis_certificate(fibre_ideal(m), trials, seed, search_bound);
  if (!cert.yes()) throw DomainError("no certified bound available: " + cert.reason);
  std::uint64_t longest = 0;
  for (const auto& e : cert.axis_vertices) longest = std::max(longest, e.length());
  return {longest, BoundScope::ForwardOnly, std::move(cert)};
}

std::vector<FlatnessRow> jet_flatness_equivalence(const MapSpec& m, std::uint64_t mu_min, std::uint64_t mu_max,
                                                  const StandardBasisOptions& opts, Execution exec) {
  if (mu_min > mu_max) throw DomainError("empty mu range");
  return map_indexed(
      mu_max - mu_min + 1,
      [&](std::size_t i) {
        FlatnessRow row;
        row.mu = mu_min + i;
        const std::vector<Poly> phi = jets_keeping_zeros(m.components, row.mu);
        row.source_kept = flat_ci(MapSpec(m.ring, m.relations, phi), opts);
        try {
          row.source_truncated = flat_ci(MapSpec(m.ring, jets_keeping_zeros(m.relations, row.mu), phi), opts);
        } catch (const DomainError& e) {
          row.truncated_note = e.what();
        }
        return row;
      },
      exec);
}

bool diagram_determinacy_check(const MapSpec& m, std::span<const Poly> psi, const StandardBasisOptions& opts) {
  if (psi.size() != m.components.size()) throw ArityMismatch("psi and phi have different numbers of components");
  const auto mu0 = milnor_mu0(m, opts);
  if (!mu0) throw DomainError("the map is not finite; no Milnor number");
  for (std::size_t j = 0; j < psi.size(); ++j)
    if (jet(psi[j], *mu0) != jet(m.components[j], *mu0))
      throw DomainError("component " + std::to_string(j + 1) + " differs from phi below order " +
                        std::to_string(*mu0 + 1));
  const MapSpec other(m.ring, m.relations, std::vector<Poly>(psi.begin(), psi.end()));
  return diagram_of_ideal(fibre_ideal(m), {}, opts) == diagram_of_ideal(fibre_ideal(other), {}, opts);
}

std::string SweepReport::summary() const {
  const std::string range = "[" + std::to_string(mu_min) + ".." + std::to_string(mu_max) + "]";
  if (stabilized_at) return "stabilized at mu=" + std::to_string(*stabilized_at) + " in range " + range;
  return "not stabilized in range " + range;
}

SweepReport jet_sweep(std::span<const Germ> gens, std::uint64_t mu_min, std::uint64_t mu_max,
                      std::uint64_t length_bound, const OrderSpec& ord, const StandardBasisOptions& opts,
                      Execution exec) {
  if (mu_min > mu_max) throw DomainError("empty mu range");
  const RingPtr ring = ring_of(gens);
  SweepReport rep;
  rep.generators.assign(gens.begin(), gens.end());
  rep.mu_min = mu_min;
  rep.mu_max = mu_max;
  rep.length_bound = length_bound;
  rep.order = ord;

  std::vector<Poly> reps;
  for (const auto& g : gens) reps.push_back(g.representative());
  rep.reference = diagram_of_ideal(Ideal(ring, reps), ord, opts);
  rep.reference_dimension = quotient_dimension(rep.reference);
  for (std::uint64_t k = 0; k <= length_bound; ++k) rep.reference_hilbert.push_back(hilbert_samuel(rep.reference, k));

  rep.rows = map_indexed(
      mu_max - mu_min + 1,
      [&](std::size_t i) {
        SweepRow row;
        row.mu = mu_min + i;
        row.jets = jet_ideal(gens, row.mu);
        const Ideal jets(ring, row.jets);
        row.slice = truncated_diagram(jets, length_bound + 1, ord);
        row.diagram = diagram_of_ideal(jets, ord, opts);
        row.equal_upto_bound = equal_upto(row.slice.diagram, rep.reference, length_bound, ord);
        row.contains_reference = std::all_of(rep.reference.vertices().begin(), rep.reference.vertices().end(),
                                             [&](const Exponent& v) {
                                               return ord.length(v) > length_bound || row.slice.diagram.contains(v);
                                             });
        row.exact_equal = row.diagram == rep.reference;
        row.first_difference = first_difference(row.slice.diagram, rep.reference, length_bound, ord);
        row.quotient_dimension = quotient_dimension(row.diagram);
        for (std::uint64_t k = 0; k <= length_bound; ++k) row.hilbert.push_back(hilbert_samuel(row.diagram, k));
        return row;
      },
      exec);

  for (auto it = rep.rows.rbegin(); it != rep.rows.rend() && it->exact_equal; ++it) rep.stabilized_at = it->mu;
  return rep;
}

DimensionProbe dimension_semicontinuity_probe(std::span<const Germ> gens, std::uint64_t mu_min,
                                              std::uint64_t mu_max, const StandardBasisOptions& opts,
                                              Execution exec) {
  if (mu_min > mu_max) throw DomainError("empty mu range");
  const RingPtr ring = ring_of(gens);
  DimensionProbe probe;
  std::vector<Poly> reps;
  for (const auto& g : gens) reps.push_back(g.representative());
  probe.reference_dimension = quotient_dimension(diagram_of_ideal(Ideal(ring, reps), {}, opts));
  probe.lower_bound = static_cast<int>(ring->arity()) - static_cast<int>(gens.size());
  const auto dims = map_indexed(
      mu_max - mu_min + 1,
      [&](std::size_t i) { return quotient_dimension(diagram_of_ideal(Ideal(ring, jet_ideal(gens, mu_min + i)), {}, opts)); },
      exec);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::uint64_t mu = mu_min + i;
    probe.rows.emplace_back(mu, dims[i]);
    if (!probe.first_equal && dims[i] == probe.reference_dimension) probe.first_equal = mu;
    if (dims[i] < probe.lower_bound) probe.lower_bound_holds = false;
  }
  return probe;
}

PerturbationReport perturbation_test(const Ideal& ideal, std::uint64_t mu, std::size_t samples, std::uint64_t seed,
                                     const StandardBasisOptions& opts, Execution exec) {
  PerturbationReport rep;
  rep.property = PerturbedProperty::RegularSequence;
  rep.mu = mu;
  rep.seed = seed;
  rep.baseline = regular_sequence(ideal, opts);
  rep.samples = map_indexed(
      samples,
      [&](std::size_t i) {
        std::mt19937_64 rng = sample_rng(seed, i);
        PerturbationSample s;
        s.index = i;
        s.perturbed = perturb(ideal.ring, ideal.generators, mu, rng);
        s.verdict = regular_sequence(Ideal(ideal.ring, s.perturbed), opts);
        s.violation = s.verdict.kind != rep.baseline.kind;
        return s;
      },
      exec);
  for (const auto& s : rep.samples) rep.violations += s.violation ? 1 : 0;
  return rep;
}

PerturbationReport perturbation_test(const MapSpec& m, std::uint64_t mu, std::size_t samples, std::uint64_t seed,
                                     PerturbedProperty property, const StandardBasisOptions& opts, Execution exec) {
  PerturbationReport rep;
  rep.property = property;
  rep.mu = mu;
  rep.seed = seed;
  auto evaluate = [&](const MapSpec& map) {
    switch (property) {
      case PerturbedProperty::RegularSequence: return regular_sequence(fibre_ideal(map), opts);
      case PerturbedProperty::FlatCi: return flat_ci(map, opts);
      case PerturbedProperty::FibreDiagram: break;
    }
    const bool same = diagram_determinacy_check(m, map.components, opts);
    return decided(same, same ? "fibre diagrams agree" : "fibre diagrams differ");
  };
  rep.baseline = evaluate(m);
  rep.samples = map_indexed(
      samples,
      [&](std::size_t i) {
        std::mt19937_64 rng = sample_rng(seed, i);
        PerturbationSample s;
        s.index = i;
        s.perturbed = perturb(m.ring, m.components, mu, rng);
        s.verdict = evaluate(MapSpec(m.ring, m.relations, s.perturbed));
        s.violation = s.verdict.kind != rep.baseline.kind;
        return s;
      },
      exec);
  for (const auto& s : rep.samples) rep.violations += s.violation ? 1 : 0;
  return rep;
}

}  // namespace staircase
