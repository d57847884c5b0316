#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staircase/diagram.hpp"
#include "staircase/ideal.hpp"
#include "staircase/poly.hpp"

namespace staircase {

inline constexpr std::size_t kDefaultPoolCeiling = 10000;
inline constexpr std::size_t kDefaultStepCeiling = 200000;
inline constexpr std::size_t kDefaultCoefficientBitsCeiling = 32768;

struct NormalFormOptions {
  std::size_t pool_ceiling = kDefaultPoolCeiling;
  /// Record u and the quotients q_i with u·f − r = Σ q_i·g_i.
  bool track_representation = false;
  /// When every exponent of length ≥ corner is known to lie in the ideal,
  /// such terms are dropped from h and from the reducers. The remainder is
  /// then a normal form modulo that power of the maximal ideal.
  std::optional<std::uint64_t> corner;
  /// Reduction steps allowed before ResourceLimitExceeded.
  std::size_t step_ceiling = kDefaultStepCeiling;
  /// Largest numerator plus denominator size, in bits, allowed in h.
  std::size_t coefficient_bits_ceiling = kDefaultCoefficientBitsCeiling;
};

struct NormalFormTrace {
  std::size_t steps = 0;
  /// Intermediate remainders added to the reducer pool (écart increases).
  std::size_t pool_growth = 0;
  std::optional<Poly> unit;
  std::vector<Poly> quotients;
};

struct NormalFormResult {
  Poly remainder;
  NormalFormTrace trace;
};

/// Mora's tangent-cone normal form.
///
/// Repeatedly cancels the initial term of h with a reducer whose initial
/// exponent divides it, picking the reducer of minimal écart (ties: smaller
/// initial exponent, then insertion index). Whenever the chosen reducer has
/// larger écart than h, h itself joins the pool. Throws DomainError on a zero
/// reducer and ResourceLimitExceeded when the pool, the step count or the
/// coefficient size passes its ceiling.
NormalFormResult mora_normal_form(const Poly& f, std::span<const Poly> reducers, const OrderSpec& ord = {},
                                  const NormalFormOptions& opts = {});

enum class BasisEngine {
  /// Écart-driven reduction with one reducer pool shared by all pairs; work
  /// is taken by homogeneous degree and postponed while cheaper work remains.
  Lazy,
  /// Each pair reduced by a fresh mora_normal_form. Can take very long when
  /// a generator is a monomial times a non-trivial unit.
  Mora,
};

struct StandardBasisOptions {
  /// Bounds the Mora pool and the number of basis elements.
  std::size_t pool_ceiling = kDefaultPoolCeiling;
  /// Bounds the reduction steps of a whole run (per pair for Mora).
  std::size_t step_ceiling = kDefaultStepCeiling;
  /// Bounds coefficient size in bits during reduction.
  std::size_t coefficient_bits_ceiling = kDefaultCoefficientBitsCeiling;
  BasisEngine engine = BasisEngine::Lazy;
};

struct PairRecord {
  std::size_t first;
  std::size_t second;
  Exponent lcm;
  std::size_t steps;
  std::size_t pool_growth;
  bool reduced_to_zero;
  /// Put back in the queue part way; a later record continues it.
  bool deferred = false;
};

struct SBasis {
  std::vector<Poly> generators;
  std::vector<Poly> basis;
  Diagram diagram;
  OrderSpec order;
  std::vector<PairRecord> trace;
};

SBasis standard_basis(const Ideal& ideal, const OrderSpec& ord = {}, const StandardBasisOptions& opts = {});

/// N(I·K{x}) for the ideal generated by `ideal`.
Diagram diagram_of_ideal(const Ideal& ideal, const OrderSpec& ord = {}, const StandardBasisOptions& opts = {});

/// s-polynomial cancelling the initial terms of f and g under `ord`.
Poly s_polynomial(const Poly& f, const Poly& g, const OrderSpec& ord);

/// One line per processed pair; debugging aid with no stable format.
std::string format_trace(const SBasis& sb);

}  // namespace staircase
