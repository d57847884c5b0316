#include "staircase/ring.hpp"

#include <algorithm>
#include <unordered_set>

#include "staircase/error.hpp"

namespace staircase {

RingSpec::RingSpec(std::vector<std::string> variables, std::size_t base_split)
    : variables_(std::move(variables)), base_split_(base_split) {
  if (variables_.empty()) throw DomainError("a ring needs at least one variable");
  if (base_split_ > variables_.size()) throw DomainError("base split exceeds the number of variables");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

RingPtr make_ring(std::vector<std::string> variables, std::size_t base_split) {
  return std::make_shared<const RingSpec>(std::move(variables), base_split);
}

RingPtr fibre_ring(const RingPtr& ring) {
  if (ring->base_split() == 0) return ring;
  std::vector<std::string> xs(ring->variables().begin() + static_cast<std::ptrdiff_t>(ring->base_split()),
                              ring->variables().end());
  return make_ring(std::move(xs));
}

RingPtr with_base_variables(const RingPtr& x_ring, std::size_t n, std::string_view prefix) {
  if (x_ring->base_split() != 0) throw DomainError("ring already has base variables");
  std::string p(prefix);
  auto clashes = [&](const std::string& pre) {
    for (std::size_t j = 1; j <= n; ++j)
      if (x_ring->index_of(pre + std::to_string(j))) return true;
    return false;
  };
  while (clashes(p)) p += '_';
  std::vector<std::string> vars;
  for (std::size_t j = 1; j <= n; ++j) vars.push_back(p + std::to_string(j));
  vars.insert(vars.end(), x_ring->variables().begin(), x_ring->variables().end());
  return make_ring(std::move(vars), n);
}

}  // namespace staircase
