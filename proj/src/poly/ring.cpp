#include "fibrephi/ring.hpp"

#include <algorithm>
#include <set>

#include "fibrephi/error.hpp"

namespace fibrephi {

RingPtr PolynomialRing::make(std::vector<std::string> target_vars,
                             std::vector<std::string> source_vars) {
  std::vector<std::string> names = std::move(target_vars);
  const std::size_t target_count = names.size();
  names.insert(names.end(), std::make_move_iterator(source_vars.begin()),
               std::make_move_iterator(source_vars.end()));
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty())
      throw PreconditionError("empty variable name");
    if (!seen.insert(n).second)
      throw PreconditionError("duplicate variable name '" + n + "'");
  }
  if (names.size() > 64)
    throw ResourceError("rings are limited to 64 variables");
  return RingPtr(new PolynomialRing(std::move(names), target_count));
}

std::vector<std::string> PolynomialRing::target_vars() const {
  return {names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(target_count_)};
}

std::vector<std::string> PolynomialRing::source_vars() const {
  return {names_.begin() + static_cast<std::ptrdiff_t>(target_count_), names_.end()};
}

std::optional<std::size_t> PolynomialRing::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr PolynomialRing::with_appended(const std::vector<std::string>& extra) const {
  auto source = source_vars();
  source.insert(source.end(), extra.begin(), extra.end());
  return make(target_vars(), std::move(source));
}

std::string PolynomialRing::fresh_name(std::string_view stem) const {
  std::string candidate(stem);
  for (int suffix = 1; index_of(candidate); ++suffix)
    candidate = std::string(stem) + std::to_string(suffix);
  return candidate;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

} // namespace fibrephi
