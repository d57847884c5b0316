#include "staircase/parse.hpp"

#include <cctype>

namespace staircase {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column_offset)
      : text_(text), ring_(ring), line_(line), offset_(column_offset) {}

  Germ germ() {
    Poly num = expression();
    skip_space();
    if (peek() == '/') {
      const std::size_t at = pos_;
      ++pos_;
      Poly den = expression();
      if (den.constant_term() == 0) fail("denominator is not a unit (zero constant term)", at);
      finish();
      return Germ(std::move(num), std::move(den));
    }
    finish();
    return Germ(std::move(num));
  }

  Poly poly() {
    Poly p = expression();
    finish();
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, line_, offset_ + at + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  Poly expression() {
    skip_space();
    Poly sum(ring_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Poly t = term();
      if (negative)
        sum -= t;
      else
        sum += t;
      skip_space();
      if (peek() != '+' && peek() != '-') return sum;
      negative = peek() == '-';
      ++pos_;
    }
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return p;
      ++pos_;
      p = p * factor();
    }
  }

  std::string digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
    return s;
  }

  std::uint32_t power(std::size_t caret) {
    skip_space();
    const std::string d = digits();
    if (d.empty()) fail("expected exponent after '^'", caret);
    if (d.size() > 9) fail("exponent too large", caret);
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  Poly factor() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den = 1;
      // `p/q` is a coefficient only when a digit follows the slash.
      std::size_t save = pos_;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          const std::size_t den_at = pos_;
          den = mpz_class(digits());
          if (den == 0) fail("zero denominator", den_at);
        } else {
          pos_ = save;
        }
      } else {
        pos_ = save;
      }
      Rational q(num, den);
      q.canonicalize();
      return Poly::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += text_[pos_++];
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'", start);
      std::uint32_t e = 1;
      skip_space();
      if (peek() == '^') {
        const std::size_t caret = pos_++;
        e = power(caret);
      }
      return Poly::monomial(ring_, Exponent::axis(ring_->arity(), *idx, e));
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'", pos_);
      ++pos_;
      skip_space();
      if (peek() == '^') {
        const std::size_t caret = pos_++;
        const std::uint32_t e = power(caret);
        Poly r = Poly::constant(ring_, 1);
        for (std::uint32_t k = 0; k < e; ++k) r = r * inner;
        return r;
      }
      return inner;
    }
    if (c == '\0') fail("unexpected end of input", pos_);
    fail(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column_offset) {
  return PolyParser(text, ring, line, column_offset).poly();
}

Germ parse_germ(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column_offset) {
  return PolyParser(text, ring, line, column_offset).germ();
}

}  // namespace staircase
