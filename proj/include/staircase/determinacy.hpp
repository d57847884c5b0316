#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staircase/diagram.hpp"
#include "staircase/germ.hpp"
#include "staircase/ideal.hpp"
#include "staircase/parallel.hpp"
#include "staircase/standard_basis.hpp"

namespace staircase {

/// A map-germ φ = (φ_1, …, φ_n) : X → K^n with X = V(h_1, …, h_s) ⊆ K^m.
struct MapSpec {
  RingPtr ring;
  std::vector<Poly> relations;
  std::vector<Poly> components;

  /// Throws DomainError unless s + n ≥ 1 and every polynomial vanishes at 0.
  MapSpec(RingPtr ring, std::vector<Poly> relations, std::vector<Poly> components);

  std::size_t arity() const { return ring->arity(); }
};

enum class VerdictKind { CertifiedYes, CertifiedNo, UnknownAtBound };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::UnknownAtBound;
  /// Human-readable evidence, e.g. "dim 1 != 0" or "unit ideal".
  std::string reason;
  std::optional<int> dimension;
  std::optional<int> expected_dimension;
  std::optional<Diagram> diagram;
  /// Pure-power vertices exhibited by an axis certificate.
  std::vector<Exponent> axis_vertices;
  std::optional<std::uint64_t> bound;
  std::optional<std::uint64_t> seed;
  /// Index of the coordinate change that produced the certificate.
  std::optional<std::size_t> trial;

  bool yes() const { return kind == VerdictKind::CertifiedYes; }
  bool no() const { return kind == VerdictKind::CertifiedNo; }
};

inline constexpr std::int64_t kDefaultCoordBound = 5;

/// Componentwise jets; zero jets are dropped.
std::vector<Poly> jet_ideal(std::span<const Poly> gens, std::uint64_t mu);
std::vector<Poly> jet_ideal(std::span<const Germ> gens, std::uint64_t mu);

/// Decides whether the generators form a regular sequence in K{x} by
/// comparing dim K{x}/I with m − s.
Verdict regular_sequence(const Ideal& ideal, const StandardBasisOptions& opts = {});

/// Looks for pure-power vertices on s distinct axes of the diagram after
/// seeded random coordinate changes. Never answers No.
Verdict regseq_axis_certificate(const Ideal& ideal, std::size_t trials, std::uint64_t seed, std::uint64_t bound,
                                std::int64_t coord_bound = kDefaultCoordBound);

/// (h_1, …, h_s, φ_1, …, φ_n): the graph ideal evaluated at y = 0.
Ideal fibre_ideal(const MapSpec& m);

/// Flatness of φ for a complete-intersection source. Throws DomainError if
/// the relations are not a certified regular sequence.
Verdict flat_ci(const MapSpec& m, const StandardBasisOptions& opts = {});

/// dim_K K{x}/(h, φ) when finite.
std::optional<std::uint64_t> milnor_mu0(const MapSpec& m, const StandardBasisOptions& opts = {});

enum class BoundScope { FullEquivalence, ForwardOnly };

std::string to_string(BoundScope s);

struct DeterminacyBound {
  std::uint64_t bound = 0;
  BoundScope scope = BoundScope::FullEquivalence;
  /// The axis certificate behind a forward-only bound.
  std::optional<Verdict> certificate;
};

/// Milnor number for finite maps; otherwise the longest axis vertex of a
/// certificate for the fibre ideal of a flat CI map. Throws DomainError when
/// neither applies.
DeterminacyBound determinacy_bound(const MapSpec& m, std::size_t trials = 8, std::uint64_t seed = 0,
                                   std::uint64_t search_bound = 12, const StandardBasisOptions& opts = {});

struct FlatnessRow {
  std::uint64_t mu = 0;
  /// (h, j^μ φ).
  Verdict source_kept;
  /// (j^μ h, j^μ φ); empty with `truncated_note` set when the truncated
  /// relations are not a certified complete intersection.
  std::optional<Verdict> source_truncated;
  std::string truncated_note;
};

std::vector<FlatnessRow> jet_flatness_equivalence(const MapSpec& m, std::uint64_t mu_min, std::uint64_t mu_max,
                                                  const StandardBasisOptions& opts = {},
                                                  Execution exec = Execution::Parallel);

/// Compares the fibre diagrams of φ and ψ. Requires j^{μ0} ψ = j^{μ0} φ with
/// μ0 the Milnor number; a false result is a counterexample.
bool diagram_determinacy_check(const MapSpec& m, std::span<const Poly> psi, const StandardBasisOptions& opts = {});

struct SweepRow {
  std::uint64_t mu = 0;
  std::vector<Poly> jets;
  /// N(I_μ) below the length bound, from the linear-algebra oracle.
  DiagramSlice slice;
  /// N(I_μ) from a standard basis of the jets.
  Diagram diagram;
  /// Slice agrees with N(I) up to the length bound.
  bool equal_upto_bound = false;
  /// N(I) ⊆ N(I_μ) on the slice.
  bool contains_reference = false;
  /// N(I_μ) = N(I) exactly.
  bool exact_equal = false;
  std::optional<Exponent> first_difference;
  int quotient_dimension = 0;
  std::vector<std::uint64_t> hilbert;
};

struct SweepReport {
  std::vector<Germ> generators;
  std::uint64_t mu_min = 0;
  std::uint64_t mu_max = 0;
  std::uint64_t length_bound = 0;
  OrderSpec order;
  Diagram reference;
  int reference_dimension = 0;
  std::vector<std::uint64_t> reference_hilbert;
  std::vector<SweepRow> rows;
  /// Least μ in range from which every row equals N(I) exactly.
  std::optional<std::uint64_t> stabilized_at;

  /// "stabilized at mu=…" or "not stabilized in range"; observations only.
  std::string summary() const;
};

/// Compares N(I_μ) with N(I) for μ in [mu_min, mu_max]. Jets are taken of
/// the series; N(I) uses the unit-cleared representatives.
SweepReport jet_sweep(std::span<const Germ> gens, std::uint64_t mu_min, std::uint64_t mu_max,
                      std::uint64_t length_bound, const OrderSpec& ord = {}, const StandardBasisOptions& opts = {},
                      Execution exec = Execution::Parallel);

struct DimensionProbe {
  int reference_dimension = 0;
  /// m − s.
  int lower_bound = 0;
  std::vector<std::pair<std::uint64_t, int>> rows;
  std::optional<std::uint64_t> first_equal;
  bool lower_bound_holds = true;
};

DimensionProbe dimension_semicontinuity_probe(std::span<const Germ> gens, std::uint64_t mu_min,
                                              std::uint64_t mu_max, const StandardBasisOptions& opts = {},
                                              Execution exec = Execution::Parallel);

enum class PerturbedProperty { RegularSequence, FlatCi, FibreDiagram };

std::string to_string(PerturbedProperty p);

struct PerturbationSample {
  std::size_t index = 0;
  std::vector<Poly> perturbed;
  /// Verdict for RegularSequence and FlatCi; CertifiedYes/No mirrors the
  /// diagram comparison for FibreDiagram.
  Verdict verdict;
  bool violation = false;
};

struct PerturbationReport {
  PerturbedProperty property = PerturbedProperty::RegularSequence;
  std::uint64_t mu = 0;
  std::uint64_t seed = 0;
  Verdict baseline;
  std::vector<PerturbationSample> samples;
  std::size_t violations = 0;
};

/// Adds seeded random polynomials of degree in (μ, μ + 3] to each generator
/// and re-evaluates regular_sequence, comparing with the unperturbed verdict.
PerturbationReport perturbation_test(const Ideal& ideal, std::uint64_t mu, std::size_t samples, std::uint64_t seed,
                                     const StandardBasisOptions& opts = {}, Execution exec = Execution::Parallel);

/// Same for map components; property FlatCi re-evaluates flat_ci, property
/// FibreDiagram runs diagram_determinacy_check (μ must be at least μ0).
PerturbationReport perturbation_test(const MapSpec& m, std::uint64_t mu, std::size_t samples, std::uint64_t seed,
                                     PerturbedProperty property, const StandardBasisOptions& opts = {},
                                     Execution exec = Execution::Parallel);

}  // namespace staircase
