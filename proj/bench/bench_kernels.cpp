// Serial vs OpenMP timings for the batch kernels.
// Usage: bench_kernels [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "staircase/determinacy.hpp"
#include "staircase/jet_oracle.hpp"
#include "staircase/parse.hpp"
#include "staircase/random.hpp"

using namespace staircase;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(22) << name << std::right << std::fixed << std::setprecision(2)
            << std::setw(12) << serial << std::setw(12) << parallel << std::setw(9) << serial / parallel
            << (same ? "   ok" : "   MISMATCH") << '\n';
  if (!same) std::exit(1);
}

std::vector<Ideal> random_ideals(std::size_t n, std::uint64_t seed) {
  const RingPtr r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(seed);
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Poly> gens;
    const auto s = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    for (std::size_t j = 0; j < s; ++j) gens.push_back(random_poly(r, 1, 4, 3, 5, rng));
    out.emplace_back(r, std::move(gens));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads " << omp_get_max_threads() << ", best of " << repeats << '\n';
  std::cout << std::left << std::setw(22) << "kernel" << std::right << std::setw(12) << "serial ms" << std::setw(12)
            << "omp ms" << std::setw(9) << "speedup" << '\n';

  {
    const auto ideals = random_ideals(64, 1);
    std::vector<CrossCheckReport> s, p;
    const double ts = time_ms([&] { s = batch_cross_check(ideals, 8, {}, {}, Execution::Serial); }, repeats);
    const double tp = time_ms([&] { p = batch_cross_check(ideals, 8, {}, {}, Execution::Parallel); }, repeats);
    bool same = s.size() == p.size();
    for (std::size_t i = 0; same && i < s.size(); ++i)
      same = s[i].agree == p[i].agree && s[i].standard_basis_diagram == p[i].standard_basis_diagram;
    row("batch_cross_check", ts, tp, same);
  }

  {
    const RingPtr r = make_ring({"x", "y"});
    const std::vector<Germ> gap{parse_germ("(x^3*y + x*y^4 - x^3*y^2) / (1 - y)", r),
                                parse_germ("(x^2*y^3 + y^6 - x^2*y^4) / (1 - y)", r)};
    SweepReport s, p;
    const double ts = time_ms([&] { s = jet_sweep(gap, 5, 12, 15, {}, {}, Execution::Serial); }, repeats);
    const double tp = time_ms([&] { p = jet_sweep(gap, 5, 12, 15, {}, {}, Execution::Parallel); }, repeats);
    bool same = s.rows.size() == p.rows.size() && s.summary() == p.summary();
    for (std::size_t i = 0; same && i < s.rows.size(); ++i) same = s.rows[i].diagram == p.rows[i].diagram;
    row("jet_sweep", ts, tp, same);
  }

  {
    const RingPtr r = make_ring({"x", "y", "z"});
    const Ideal ideal(r, {parse_poly("x^2 + y*z", r), parse_poly("y^3 + x*z", r), parse_poly("z^2 + x*y", r)});
    PerturbationReport s, p;
    const double ts = time_ms([&] { s = perturbation_test(ideal, 4, 32, 7, {}, Execution::Serial); }, repeats);
    const double tp = time_ms([&] { p = perturbation_test(ideal, 4, 32, 7, {}, Execution::Parallel); }, repeats);
    bool same = s.violations == p.violations && s.samples.size() == p.samples.size();
    for (std::size_t i = 0; same && i < s.samples.size(); ++i) same = s.samples[i].verdict.kind == p.samples[i].verdict.kind;
    row("perturbation_test", ts, tp, same);
  }
  return 0;
}
