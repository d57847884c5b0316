#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "staircase/cli.hpp"
#include "staircase/error.hpp"

using namespace staircase;

int main(int argc, char** argv) {
  CLI::App app{"Diagrams of initial exponents, flatness and jet determinacy over local rings"};
  app.set_help_all_flag("--help-all");

  std::string command;
  std::string file;
  std::string order, mu;
  cli::Flags flags;
  std::uint64_t seed = 0, bound = 0, len = 0;
  std::size_t trials = 0;
  std::string name;

  app.add_option("command", command, "One of: diagram vertices hilbert dim regseq flat-ci milnor jet sweep "
                                     "oracle-check det-example")
      ->required()
      ->check(CLI::IsMember(cli::commands()));
  app.add_option("file", file, "Problem file (not used by det-example)");
  auto* o_order = app.add_option("--order", order, "Weights w1,w2,... (default all 1)");
  auto* o_seed = app.add_option("--seed", seed, "Random seed (default 0)");
  auto* o_trials = app.add_option("--trials", trials, "Random coordinate changes (default 8)");
  auto* o_bound = app.add_option("--bound", bound, "Length bound, truncation order or Hilbert range");
  auto* o_mu = app.add_option("--mu", mu, "Jet orders a..b");
  auto* o_len = app.add_option("--len", len, "Sweep length bound (default mu_max + 3)");
  auto* o_name = app.add_option("--name", name, "Restrict to one ideal or map block");
  app.add_flag("--json", flags.json, "Emit a JSON report");
  app.add_flag("--expect-yes", flags.expect_yes, "Exit with status 2 unless every verdict is CertifiedYes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  try {
    if (*o_order) flags.order = parse_weights(order);
    if (*o_mu) flags.mu = parse_mu_range(mu);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  if (*o_seed) flags.seed = seed;
  if (*o_trials) flags.trials = trials;
  if (*o_bound) flags.bound = bound;
  if (*o_len) flags.len = len;
  if (*o_name) flags.name = name;
  if (const char* env = std::getenv("STAIRCASE_POOL_CEILING")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v == 0) {
      std::cerr << "error: STAIRCASE_POOL_CEILING must be a positive integer\n";
      return cli::kUsage;
    }
    flags.pool_ceiling = static_cast<std::size_t>(v);
  }

  std::string source;
  if (command != "det-example") {
    if (file.empty()) {
      std::cerr << "error: " << command << " needs a problem file\n";
      return cli::kUsage;
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << file << '\n';
      return cli::kUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    source = ss.str();
  }

  const auto start = std::chrono::steady_clock::now();
  cli::CommandResult r = cli::run_command(command, file, source, flags);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  if (!r.error.empty()) {
    std::cerr << "error: " << r.error << '\n';
    return r.exit_code;
  }
  if (flags.json) {
    r.report["timing_ms"] = ms.count();
    std::cout << r.report.dump(2) << '\n';
  } else {
    std::cout << r.text << "timing_ms: " << ms.count() << '\n';
  }
  return r.exit_code;
}
