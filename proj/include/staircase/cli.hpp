#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "staircase/problem.hpp"
#include "staircase/standard_basis.hpp"

namespace staircase::cli {

enum ExitCode : int { kRan = 0, kUsage = 1, kNotYes = 2, kResourceLimit = 3 };

/// Command-line settings; unset fields fall back to the problem file's
/// options and then to per-command defaults.
struct Flags {
  std::optional<std::vector<std::uint32_t>> order;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> bound;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> mu;
  std::optional<std::uint64_t> len;
  std::optional<std::string> name;
  bool json = false;
  bool expect_yes = false;
  std::size_t pool_ceiling = kDefaultPoolCeiling;
};

struct CommandResult {
  int exit_code = kRan;
  /// Report body without timing; byte-identical for identical inputs.
  std::string text;
  nlohmann::json report;
  /// Set when exit_code is kUsage or kResourceLimit.
  std::string error;
};

const std::vector<std::string>& commands();

/// Runs `command` on the problem source. `path` is only echoed. The
/// det-example command ignores the source.
CommandResult run_command(const std::string& command, std::string_view path, std::string_view source,
                          const Flags& flags);

/// 64-bit FNV-1a digest, hex encoded.
std::string digest(std::string_view text);

}  // namespace staircase::cli
