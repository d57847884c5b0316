#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "staircase/error.hpp"
#include "staircase/germ.hpp"
#include "staircase/poly.hpp"

namespace staircase {

/// Syntax or name-resolution failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Parses a polynomial such as `x^3*y + x*y^4 - 2/3*x^3*y^2`.
///
/// Terms are `coeff`, `coeff*mono` or `mono`; monomials are `var(^exp)?`
/// factors joined by `*`; coefficients are integers or `p/q`. Parenthesised
/// sub-expressions with an optional power are accepted as factors. `line`
/// offsets the reported positions when the text comes from a larger file.
Poly parse_poly(std::string_view text, const RingPtr& ring, std::size_t line = 1, std::size_t column_offset = 0);

/// Parses `P` or `P / U` where U must evaluate to a unit at the origin.
Germ parse_germ(std::string_view text, const RingPtr& ring, std::size_t line = 1, std::size_t column_offset = 0);

}  // namespace staircase
