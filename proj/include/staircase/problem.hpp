#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "staircase/germ.hpp"
#include "staircase/parse.hpp"
#include "staircase/ring.hpp"

namespace staircase {

struct IdealBlock {
  std::string name;
  std::size_t line = 0;
  std::vector<Germ> generators;
};

struct MapBlock {
  std::string name;
  std::size_t line = 0;
  std::vector<Poly> relations;
  std::vector<Poly> components;
};

/// Settings a problem file may fix; command-line flags take precedence.
struct ProblemOptions {
  std::optional<std::vector<std::uint32_t>> order;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> bound;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> mu;
  std::optional<std::uint64_t> len;
};

struct ProblemFile {
  RingPtr ring;
  std::vector<IdealBlock> ideals;
  std::vector<MapBlock> maps;
  ProblemOptions options;

  const IdealBlock* find_ideal(std::string_view name) const;
  const MapBlock* find_map(std::string_view name) const;
};

/// Parses the block-structured problem format:
///
///     # comment
///     ring x y
///     option mu 5..9
///     ideal I
///       x^3*y + x*y^4 - x^3*y^2
///       (x^2*y^3 + y^6 - x^2*y^4) / (1 - y)
///     map F
///       relation x*y
///       component x + y
///
/// Indented lines belong to the preceding block. Throws ParseError with the
/// line and column of the offending token.
ProblemFile parse_problem(std::string_view text);

/// `a..b` with a ≤ b.
std::pair<std::uint64_t, std::uint64_t> parse_mu_range(std::string_view text);

/// Comma-separated positive weights.
std::vector<std::uint32_t> parse_weights(std::string_view text);

}  // namespace staircase
