#include "staircase/problem.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "staircase/error.hpp"

namespace staircase {

namespace {

std::uint64_t parse_natural(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw DomainError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

struct Line {
  std::size_t number;
  std::size_t indent;
  std::string_view text;  // comment and trailing space removed
};

// Splits off the first whitespace-delimited word; returns {word, column of rest}.
std::pair<std::string_view, std::size_t> first_word(std::string_view s, std::size_t from) {
  std::size_t i = from;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  std::string_view word = s.substr(from, i - from);
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return {word, i};
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

class ProblemParser {
 public:
  explicit ProblemParser(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(start, end - start);
      ++number;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
      std::size_t indent = 0;
      while (indent < raw.size() && (raw[indent] == ' ' || raw[indent] == '\t')) ++indent;
      if (indent < raw.size()) lines_.push_back({number, indent, raw});
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  ProblemFile run() {
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      const Line& ln = lines_[i];
      if (ln.indent > 0) {
        if (block_ == Block::None) fail(ln, ln.indent, "indented line outside a block");
        block_line(ln);
        continue;
      }
      block_ = Block::None;
      const auto [word, rest] = first_word(ln.text, 0);
      if (word == "ring") {
        ring_decl(ln, rest);
      } else if (word == "ideal" || word == "map") {
        if (!pf_.ring) fail(ln, 0, "'" + std::string(word) + "' before the ring declaration");
        const auto [name, after] = first_word(ln.text, rest);
        if (!valid_name(name)) fail(ln, rest, "expected a block name");
        if (after != ln.text.size()) fail(ln, after, "unexpected text after block name");
        if (!names_.insert(std::string(name)).second) fail(ln, rest, "duplicate name '" + std::string(name) + "'");
        if (word == "ideal") {
          pf_.ideals.push_back({std::string(name), ln.number, {}});
          block_ = Block::Ideal;
        } else {
          pf_.maps.push_back({std::string(name), ln.number, {}, {}});
          block_ = Block::Map;
        }
      } else if (word == "option") {
        option(ln, rest);
      } else {
        fail(ln, 0, "unknown keyword '" + std::string(word) + "'");
      }
    }
    if (!pf_.ring) throw ParseError("missing ring declaration", lines_.empty() ? 1 : lines_.back().number, 1);
    if (pf_.options.order && pf_.options.order->size() != pf_.ring->arity())
      throw ParseError("order has " + std::to_string(pf_.options.order->size()) + " weights for " +
                           std::to_string(pf_.ring->arity()) + " variables",
                       order_line_, 1);
    return std::move(pf_);
  }

 private:
  enum class Block { None, Ideal, Map };

  [[noreturn]] static void fail(const Line& ln, std::size_t col, const std::string& msg) {
    throw ParseError(msg, ln.number, col + 1);
  }

  void ring_decl(const Line& ln, std::size_t from) {
    if (pf_.ring) fail(ln, 0, "ring declared twice");
    std::vector<std::string> vars;
    std::set<std::string> seen;
    std::size_t pos = from;
    while (pos < ln.text.size()) {
      const auto [name, next] = first_word(ln.text, pos);
      if (!valid_name(name)) fail(ln, pos, "invalid variable name '" + std::string(name) + "'");
      if (!seen.insert(std::string(name)).second) fail(ln, pos, "duplicate variable '" + std::string(name) + "'");
      vars.emplace_back(name);
      pos = next;
    }
    if (vars.empty()) fail(ln, from, "ring needs at least one variable");
    pf_.ring = make_ring(std::move(vars));
  }

  void option(const Line& ln, std::size_t from) {
    const auto [key, at] = first_word(ln.text, from);
    const std::string_view value = ln.text.substr(at);
    if (value.empty()) fail(ln, at, "option '" + std::string(key) + "' needs a value");
    try {
      if (key == "order") {
        pf_.options.order = parse_weights(value);
        order_line_ = ln.number;
      } else if (key == "seed") {
        pf_.options.seed = parse_natural(value, "seed");
      } else if (key == "trials") {
        pf_.options.trials = parse_natural(value, "trials");
      } else if (key == "bound") {
        pf_.options.bound = parse_natural(value, "bound");
      } else if (key == "mu") {
        pf_.options.mu = parse_mu_range(value);
      } else if (key == "len") {
        pf_.options.len = parse_natural(value, "len");
      } else {
        fail(ln, from, "unknown option '" + std::string(key) + "'");
      }
    } catch (const DomainError& e) {
      fail(ln, at, e.what());
    }
  }

  void block_line(const Line& ln) {
    if (block_ == Block::Ideal) {
      pf_.ideals.back().generators.push_back(
          parse_germ(ln.text.substr(ln.indent), pf_.ring, ln.number, ln.indent));
      return;
    }
    const auto [word, rest] = first_word(ln.text, ln.indent);
    if (word != "relation" && word != "component")
      fail(ln, ln.indent, "expected 'relation' or 'component'");
    if (rest == ln.text.size()) fail(ln, rest, "missing polynomial");
    Poly p = parse_poly(ln.text.substr(rest), pf_.ring, ln.number, rest);
    if (p.constant_term() != 0) fail(ln, rest, "map polynomials must vanish at the origin");
    auto& m = pf_.maps.back();
    (word == "relation" ? m.relations : m.components).push_back(std::move(p));
  }

  std::vector<Line> lines_;
  ProblemFile pf_;
  Block block_ = Block::None;
  std::set<std::string> names_;
  std::size_t order_line_ = 0;
};

}  // namespace

const IdealBlock* ProblemFile::find_ideal(std::string_view name) const {
  for (const auto& b : ideals)
    if (b.name == name) return &b;
  return nullptr;
}

const MapBlock* ProblemFile::find_map(std::string_view name) const {
  for (const auto& b : maps)
    if (b.name == name) return &b;
  return nullptr;
}

ProblemFile parse_problem(std::string_view text) { return ProblemParser(text).run(); }

std::pair<std::uint64_t, std::uint64_t> parse_mu_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_natural(text, "mu range");
    return {v, v};
  }
  const auto a = parse_natural(text.substr(0, dots), "mu range");
  const auto b = parse_natural(text.substr(dots + 2), "mu range");
  if (a > b) throw DomainError("empty mu range " + std::string(text));
  return {a, b};
}

std::vector<std::uint32_t> parse_weights(std::string_view text) {
  std::vector<std::uint32_t> w;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto v = parse_natural(part, "weight");
    if (v == 0 || v > UINT32_MAX) throw DomainError("weights must be positive");
    w.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

}  // namespace staircase
