#include "staircase/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "staircase/determinacy.hpp"
#include "staircase/error.hpp"
#include "staircase/jet_oracle.hpp"
#include "staircase/linear.hpp"

namespace staircase::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

json to_json(const Exponent& e) {
  json a = json::array();
  for (auto v : e) a.push_back(v);
  return a;
}

json to_json(const Diagram& d) {
  json a = json::array();
  for (const auto& v : d.vertices()) a.push_back(to_json(v));
  return a;
}

json to_json(const std::optional<Exponent>& e) { return e ? to_json(*e) : json(nullptr); }

json to_json(const Verdict& v) {
  json j{{"kind", to_string(v.kind)}, {"reason", v.reason}};
  if (v.dimension) j["dimension"] = *v.dimension;
  if (v.expected_dimension) j["expected_dimension"] = *v.expected_dimension;
  if (!v.axis_vertices.empty()) {
    j["axis_vertices"] = json::array();
    for (const auto& e : v.axis_vertices) j["axis_vertices"].push_back(to_json(e));
  }
  if (v.bound) j["bound"] = *v.bound;
  if (v.seed) j["seed"] = *v.seed;
  if (v.trial) j["trial"] = *v.trial;
  return j;
}

std::string vertices_text(const Diagram& d) {
  if (d.empty()) return "(none)";
  std::string s;
  for (const auto& v : d.vertices()) s += (s.empty() ? "" : " ") + v.to_string();
  return s;
}

std::string verdict_text(const Verdict& v) { return to_string(v.kind) + " (" + v.reason + ")"; }

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

struct Settings {
  OrderSpec order;
  std::vector<std::uint32_t> weights;
  std::uint64_t seed = 0;
  std::size_t trials = 8;
  std::optional<std::uint64_t> bound;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> mu;
  std::optional<std::uint64_t> len;
  StandardBasisOptions sb;
};

class Runner {
 public:
  Runner(std::string command, const Flags& flags) : command_(std::move(command)), flags_(flags) {}

  void load(std::string_view source) {
    problem_ = parse_problem(source);
    resolve(problem_->options, problem_->ring->arity());
  }

  void resolve_builtin(std::size_t arity) { resolve({}, arity); }

  CommandResult finish(std::string_view path, std::string_view source) {
    json inputs{{"file", std::string(path)}, {"digest", digest(source)}};
    inputs["name"] = flags_.name ? json(*flags_.name) : json(nullptr);
    inputs["order"] = s_.weights;
    inputs["trials"] = s_.trials;
    inputs["bound"] = s_.bound ? json(*s_.bound) : json(nullptr);
    inputs["mu"] = s_.mu ? json{s_.mu->first, s_.mu->second} : json(nullptr);
    inputs["len"] = s_.len ? json(*s_.len) : json(nullptr);

    CommandResult r;
    r.report = json{{"command", command_}, {"inputs", inputs}, {"seed", s_.seed}, {"results", results_}};
    std::ostringstream head;
    head << "command: " << command_ << '\n';
    if (!path.empty()) head << "input: " << path << " (digest " << digest(source) << ")\n";
    head << "seed: " << s_.seed << '\n';
    if (!s_.weights.empty()) head << "order: " << join(s_.weights, ",") << '\n';
    r.text = head.str() + text_.str();
    if (flags_.expect_yes && !all_yes_) r.exit_code = kNotYes;
    return r;
  }

  void dispatch() {
    static const std::map<std::string, void (Runner::*)()> table{
        {"diagram", &Runner::diagram},     {"vertices", &Runner::vertices}, {"hilbert", &Runner::hilbert},
        {"dim", &Runner::dim},             {"regseq", &Runner::regseq},     {"flat-ci", &Runner::flat},
        {"milnor", &Runner::milnor},       {"jet", &Runner::jets},          {"sweep", &Runner::sweep},
        {"oracle-check", &Runner::oracle}, {"det-example", &Runner::det_example}};
    const bool verdicts = command_ == "regseq" || command_ == "flat-ci";
    if (flags_.expect_yes && !verdicts) throw UsageError("--expect-yes applies to regseq and flat-ci only");
    (this->*table.at(command_))();
  }

 private:
  void resolve(const ProblemOptions& file, std::size_t arity) {
    auto weights = flags_.order ? flags_.order : file.order;
    if (weights) {
      if (weights->size() != arity)
        throw UsageError("--order has " + std::to_string(weights->size()) + " weights for " + std::to_string(arity) +
                         " variables");
      s_.order = OrderSpec(*weights);
      s_.weights = *weights;
    }
    s_.seed = flags_.seed.value_or(file.seed.value_or(0));
    s_.trials = flags_.trials.value_or(file.trials.value_or(8));
    if (s_.trials == 0) throw UsageError("--trials must be at least 1");
    s_.bound = flags_.bound ? flags_.bound : file.bound;
    s_.mu = flags_.mu ? flags_.mu : file.mu;
    s_.len = flags_.len ? flags_.len : file.len;
    s_.sb.pool_ceiling = flags_.pool_ceiling;
  }

  std::uint64_t bound_or(std::uint64_t d) {
    if (!s_.bound) s_.bound = d;
    return *s_.bound;
  }
  std::pair<std::uint64_t, std::uint64_t> mu_or(std::uint64_t a, std::uint64_t b) {
    if (!s_.mu) s_.mu = std::pair{a, b};
    return *s_.mu;
  }

  std::vector<const IdealBlock*> ideal_targets() {
    std::vector<const IdealBlock*> out;
    for (const auto& b : problem_->ideals)
      if (!flags_.name || b.name == *flags_.name) out.push_back(&b);
    if (out.empty())
      throw UsageError(flags_.name ? "no ideal named '" + *flags_.name + "'" : "the problem file has no ideal blocks");
    return out;
  }

  std::vector<const MapBlock*> map_targets() {
    std::vector<const MapBlock*> out;
    for (const auto& b : problem_->maps)
      if (!flags_.name || b.name == *flags_.name) out.push_back(&b);
    if (out.empty())
      throw UsageError(flags_.name ? "no map named '" + *flags_.name + "'" : "the problem file has no map blocks");
    return out;
  }

  Ideal representatives(const IdealBlock& b) const {
    std::vector<Poly> g;
    for (const auto& x : b.generators) g.push_back(x.representative());
    return Ideal(problem_->ring, std::move(g));
  }

  MapSpec map_of(const MapBlock& b) const {
    try {
      return MapSpec(problem_->ring, b.relations, b.components);
    } catch (const DomainError& e) {
      throw UsageError("map " + b.name + ": " + e.what());
    }
  }

  void diagram() {
    for (const auto* b : ideal_targets()) {
      const SBasis sb = standard_basis(representatives(*b), s_.order, s_.sb);
      json basis = json::array();
      for (const auto& p : sb.basis) basis.push_back(p.to_string());
      results_.push_back({{"name", b->name}, {"vertices", to_json(sb.diagram)}, {"basis", basis},
                          {"pairs", sb.trace.size()}});
      text_ << "\nideal " << b->name << "\n  vertices: " << vertices_text(sb.diagram) << "\n  standard basis:\n";
      for (const auto& p : sb.basis) text_ << "    " << p.to_string() << '\n';
    }
  }

  void vertices() {
    for (const auto* b : ideal_targets()) {
      const Diagram d = diagram_of_ideal(representatives(*b), s_.order, s_.sb);
      results_.push_back({{"name", b->name}, {"vertices", to_json(d)}});
      text_ << "ideal " << b->name << ": " << vertices_text(d) << '\n';
    }
  }

  void hilbert() {
    const auto k_max = bound_or(10);
    for (const auto* b : ideal_targets()) {
      const Diagram d = diagram_of_ideal(representatives(*b), s_.order, s_.sb);
      std::vector<std::uint64_t> h;
      for (std::uint64_t k = 0; k <= k_max; ++k) h.push_back(hilbert_samuel(d, k));
      results_.push_back({{"name", b->name}, {"hilbert", h}});
      text_ << "ideal " << b->name << ": H(0.." << k_max << ") = " << join(h, " ") << '\n';
    }
  }

  void dim() {
    for (const auto* b : ideal_targets()) {
      const Diagram d = diagram_of_ideal(representatives(*b), s_.order, s_.sb);
      const int q = quotient_dimension(d);
      const auto size = complement_size(d);
      results_.push_back({{"name", b->name},
                          {"dimension", q},
                          {"unit_ideal", d.is_unit()},
                          {"colength", size ? json(*size) : json(nullptr)}});
      text_ << "ideal " << b->name << ": ";
      if (d.is_unit())
        text_ << "unit ideal\n";
      else
        text_ << "dim " << q << (size ? ", colength " + std::to_string(*size) : std::string()) << '\n';
    }
  }

  void regseq() {
    const auto bound = bound_or(12);
    for (const auto* b : ideal_targets()) {
      const Ideal ideal = representatives(*b);
      const Verdict v = regular_sequence(ideal, s_.sb);
      const Verdict axis = regseq_axis_certificate(ideal, s_.trials, s_.seed, bound);
      all_yes_ = all_yes_ && v.yes();
      results_.push_back({{"name", b->name}, {"verdict", to_json(v)}, {"axis_certificate", to_json(axis)}});
      text_ << "ideal " << b->name << ": " << verdict_text(v) << "\n  axis certificate: " << verdict_text(axis);
      if (axis.yes() && !axis.axis_vertices.empty()) {
        std::vector<std::string> vs;
        for (const auto& e : axis.axis_vertices) vs.push_back(e.to_string());
        text_ << " vertices " << join(vs, " ") << " (trial " << *axis.trial << ")";
      }
      text_ << '\n';
    }
  }

  void flat() {
    for (const auto* b : map_targets()) {
      try {
        const Verdict v = flat_ci(map_of(*b), s_.sb);
        all_yes_ = all_yes_ && v.yes();
        results_.push_back({{"name", b->name}, {"verdict", to_json(v)}});
        text_ << "map " << b->name << ": " << verdict_text(v) << '\n';
      } catch (const DomainError& e) {
        all_yes_ = false;
        results_.push_back({{"name", b->name}, {"error", e.what()}});
        text_ << "map " << b->name << ": not applicable (" << e.what() << ")\n";
      }
    }
  }

  void milnor() {
    const auto bound = bound_or(12);
    for (const auto* b : map_targets()) {
      const MapSpec m = map_of(*b);
      const auto mu0 = milnor_mu0(m, s_.sb);
      json item{{"name", b->name}, {"milnor", mu0 ? json(*mu0) : json(nullptr)}};
      text_ << "map " << b->name << ": milnor " << (mu0 ? std::to_string(*mu0) : "undefined (fibre not finite)");
      try {
        const DeterminacyBound db = determinacy_bound(m, s_.trials, s_.seed, bound, s_.sb);
        item["determinacy_bound"] = {{"bound", db.bound}, {"scope", to_string(db.scope)}};
        text_ << "\n  determinacy bound " << db.bound << " (" << to_string(db.scope) << ")\n";
      } catch (const DomainError& e) {
        item["determinacy_bound"] = {{"error", e.what()}};
        text_ << "\n  determinacy bound: " << e.what() << '\n';
      }
      results_.push_back(item);
    }
  }

  void jets() {
    const auto [a, b_] = mu_or(1, 5);
    for (const auto* b : ideal_targets()) {
      json rows = json::array();
      text_ << "\nideal " << b->name << '\n';
      for (std::uint64_t mu = a; mu <= b_; ++mu) {
        const auto js = jet_ideal(std::span<const Germ>(b->generators), mu);
        const Diagram d = diagram_of_ideal(Ideal(problem_->ring, js), s_.order, s_.sb);
        json gens = json::array();
        for (const auto& p : js) gens.push_back(p.to_string());
        rows.push_back({{"mu", mu}, {"jets", gens}, {"vertices", to_json(d)}});
        text_ << "  mu=" << mu << ": N(I_mu) = " << vertices_text(d) << '\n';
        for (const auto& p : js) text_ << "    " << p.to_string() << '\n';
      }
      results_.push_back({{"name", b->name}, {"rows", rows}});
    }
  }

  void sweep() {
    const auto [a, b_] = mu_or(1, 6);
    if (!s_.len) s_.len = b_ + 3;
    for (const auto* b : ideal_targets()) {
      const SweepReport rep = jet_sweep(b->generators, a, b_, *s_.len, s_.order, s_.sb);
      json rows = json::array();
      for (const auto& r : rep.rows) {
        rows.push_back({{"mu", r.mu},
                        {"vertices", to_json(r.diagram)},
                        {"slice_vertices", to_json(r.slice.diagram)},
                        {"equal_upto_len", r.equal_upto_bound},
                        {"contains_reference", r.contains_reference},
                        {"exact_equal", r.exact_equal},
                        {"first_difference", to_json(r.first_difference)},
                        {"dimension", r.quotient_dimension},
                        {"hilbert", r.hilbert}});
      }
      results_.push_back({{"name", b->name},
                          {"reference_vertices", to_json(rep.reference)},
                          {"reference_dimension", rep.reference_dimension},
                          {"rows", rows},
                          {"stabilized_at", rep.stabilized_at ? json(*rep.stabilized_at) : json(nullptr)},
                          {"summary", rep.summary()}});
      text_ << "\nideal " << b->name << "  N(I) = " << vertices_text(rep.reference) << "  len " << *s_.len << '\n';
      text_ << "  mu  =N(I)<=len  >=N(I)  exact  first-diff  dim  N(I_mu)\n";
      for (const auto& r : rep.rows) {
        char line[96];
        std::snprintf(line, sizeof line, "  %-3llu %-11s %-7s %-6s %-11s %-4d ", static_cast<unsigned long long>(r.mu),
                      r.equal_upto_bound ? "yes" : "no", r.contains_reference ? "yes" : "no",
                      r.exact_equal ? "yes" : "no", r.first_difference ? r.first_difference->to_string().c_str() : "-",
                      r.quotient_dimension);
        text_ << line << vertices_text(r.diagram) << '\n';
      }
      text_ << "  " << rep.summary() << '\n';
    }
  }

  void oracle() {
    const auto N = bound_or(8);
    if (N == 0) throw UsageError("--bound must be at least 1 for oracle-check");
    for (const auto* b : ideal_targets()) {
      const auto rep = oracle_cross_check(representatives(*b), N, s_.order, s_.sb);
      results_.push_back({{"name", b->name},
                          {"agree", rep.agree},
                          {"first_difference", to_json(rep.first_difference)},
                          {"standard_basis_vertices", to_json(rep.standard_basis_diagram)},
                          {"oracle_vertices", to_json(rep.oracle_slice.diagram)},
                          {"N", N}});
      text_ << "ideal " << b->name << ": " << (rep.agree ? "agree" : "DISAGREE") << " below N=" << N;
      if (rep.first_difference) text_ << ", first difference " << rep.first_difference->to_string();
      text_ << "\n  standard basis: " << vertices_text(rep.standard_basis_diagram)
            << "\n  oracle:         " << vertices_text(rep.oracle_slice.diagram) << '\n';
    }
  }

  void det_example() {
    const auto [a, b_] = mu_or(5, 10);
    const RingPtr r = make_ring({"x", "y"});
    const auto P = [&](const char* s) { return parse_poly(s, r); };
    const Poly unit = P("1 - y");
    const Germ f1(P("x^3*y + x*y^4 - x^3*y^2"), unit);
    const Germ f2(P("x^2*y^3 + y^6 - x^2*y^4"), unit);
    const Ideal full(r, {f1.representative(), f2.representative()});
    const Diagram reference = diagram_of_ideal(full, {}, s_.sb);
    std::uint32_t gap_to = 0;
    while (gap_to < 50 && !reference.contains(Exponent{1, gap_to + 1})) ++gap_to;

    text_ << "\ngap example: f1 = " << f1.to_string() << ", f2 = " << f2.to_string() << '\n'
          << "  N(I) = " << vertices_text(reference) << "; (1,k) outside N(I) for 1 <= k <= " << gap_to << '\n';
    json rows = json::array();
    for (std::uint64_t mu = a; mu <= b_; ++mu) {
      const Poly j1 = f1.jet(mu);
      const Poly j2 = f2.jet(mu);
      const Exponent w{1, static_cast<std::uint32_t>(mu + 1)};
      const Poly xy_mu = Poly::monomial(r, w);
      const bool identity = P("y^2") * j1 - P("x") * j2 == xy_mu;
      const Ideal jets(r, {j1, j2});
      const bool in_sb = diagram_of_ideal(jets, {}, s_.sb).contains(w);
      const auto in_oracle = truncated_diagram(jets, mu + 3).contains(w);
      const Poly det = determinant({{P("1"), P("0"), j1}, {P("1"), P("1"), j2}, {P("y^2 - x"), -P("x"), P("0")}});
      const bool det_matches = det == xy_mu;
      rows.push_back({{"mu", mu},
                      {"jet_f1", j1.to_string()},
                      {"jet_f2", j2.to_string()},
                      {"syzygy_identity", identity},
                      {"witness", to_json(w)},
                      {"witness_in_standard_basis_diagram", in_sb},
                      {"witness_in_oracle_slice", in_oracle.value_or(false)},
                      {"determinant", det.to_string()},
                      {"determinant_equals_x_y_mu_plus_1", det_matches}});
      text_ << "  mu=" << mu << ": y^2*j1 - x*j2 = x*y^" << mu + 1 << " " << (identity ? "yes" : "no")
            << "; (1," << mu + 1 << ") in N(I_mu): standard basis " << (in_sb ? "yes" : "no") << ", oracle "
            << (in_oracle.value_or(false) ? "yes" : "no") << "; det = " << det.to_string()
            << (det_matches ? " (= x*y^" : " (!= x*y^") << mu + 1 << ")\n";
    }
    results_.push_back({{"name", "gap-example"},
                        {"reference_vertices", to_json(reference)},
                        {"gap_checked_to", gap_to},
                        {"rows", rows}});
  }

  std::string command_;
  Flags flags_;
  Settings s_;
  std::optional<ProblemFile> problem_;
  json results_ = json::array();
  std::ostringstream text_;
  bool all_yes_ = true;
};

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"diagram", "vertices", "hilbert", "dim",          "regseq",     "flat-ci",
                                              "milnor",  "jet",      "sweep",   "oracle-check", "det-example"};
  return names;
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CommandResult run_command(const std::string& command, std::string_view path, std::string_view source,
                          const Flags& flags) {
  auto failure = [](int code, std::string msg) {
    CommandResult r;
    r.exit_code = code;
    r.error = std::move(msg);
    return r;
  };
  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    return failure(kUsage, "unknown command '" + command + "'");
  try {
    Runner runner(command, flags);
    if (command == "det-example") {
      runner.resolve_builtin(2);
      runner.dispatch();
      return runner.finish("", "");
    }
    runner.load(source);
    runner.dispatch();
    return runner.finish(path, source);
  } catch (const ParseError& e) {
    return failure(kUsage, std::string(path) + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                               ": " + e.message());
  } catch (const ResourceLimitExceeded& e) {
    return failure(kResourceLimit, e.what());
  } catch (const Error& e) {
    return failure(kUsage, e.what());
  }
}

}  // namespace staircase::cli
