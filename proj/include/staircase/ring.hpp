#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

/// Variable list of K{y, x}. The first `base_split` variables are the base
/// variables y; the rest are the fibre variables x.
class RingSpec {
 public:
  explicit RingSpec(std::vector<std::string> variables, std::size_t base_split = 0);

  std::size_t arity() const { return variables_.size(); }
  std::size_t base_split() const { return base_split_; }
  std::size_t fibre_arity() const { return variables_.size() - base_split_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::vector<std::string> variables_;
  std::size_t base_split_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> variables, std::size_t base_split = 0);

/// Ring on the fibre variables of `ring` only.
RingPtr fibre_ring(const RingPtr& ring);

/// K{y_1..y_n, x} built on top of an x-only ring; base names are `prefix1..n`
/// unless that collides with an existing variable, in which case underscores
/// are appended.
RingPtr with_base_variables(const RingPtr& x_ring, std::size_t n, std::string_view prefix = "y");

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace staircase
