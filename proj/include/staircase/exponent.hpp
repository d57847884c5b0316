#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace staircase {

/// A multi-index β ∈ ℕ^m. Comparison as a monomial order lives in OrderSpec;
/// this type only knows componentwise structure.
class Exponent {
 public:
  using value_type = std::uint32_t;

  Exponent() = default;
  explicit Exponent(std::size_t arity) : e_(arity, 0) {}
  Exponent(std::initializer_list<value_type> il) : e_(il) {}
  explicit Exponent(std::vector<value_type> v) : e_(std::move(v)) {}

  static Exponent axis(std::size_t arity, std::size_t i, value_type power = 1);

  std::size_t size() const { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  std::span<const value_type> values() const { return e_; }

  /// Total degree |β|.
  std::uint64_t length() const;
  bool is_zero() const;
  /// Componentwise ≤, i.e. x^this divides x^other.
  bool divides(const Exponent& other) const;
  /// Index of the only nonzero entry, or -1 when β is zero or mixed.
  int pure_axis() const;

  Exponent& operator+=(const Exponent& o);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  /// Requires b.divides(a).
  friend Exponent operator-(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent&, const Exponent&) = default;

  std::string to_string() const;

 private:
  std::vector<value_type> e_;
};

Exponent lcm(const Exponent& a, const Exponent& b);

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

}  // namespace staircase
