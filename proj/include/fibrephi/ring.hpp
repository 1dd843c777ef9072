#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibrephi {

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

/// Variables of Q[y, x]: the target block (y) always precedes the source
/// block (x). Auxiliary variables introduced by the algorithms (names
/// starting with '_') are appended to the source block.
class PolynomialRing {
public:
  static RingPtr make(std::vector<std::string> target_vars, std::vector<std::string> source_vars);

  std::size_t arity() const noexcept { return names_.size(); }
  std::size_t target_count() const noexcept { return target_count_; }
  std::size_t source_count() const noexcept { return names_.size() - target_count_; }

  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::vector<std::string> target_vars() const;
  std::vector<std::string> source_vars() const;

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same variables plus `extra` appended to the source block.
  RingPtr with_appended(const std::vector<std::string>& extra) const;
  /// A fresh auxiliary name not clashing with any variable of this ring.
  std::string fresh_name(std::string_view stem) const;

  bool operator==(const PolynomialRing& other) const noexcept {
    return target_count_ == other.target_count_ && names_ == other.names_;
  }

private:
  PolynomialRing(std::vector<std::string> names, std::size_t target_count)
      : names_(std::move(names)), target_count_(target_count) {}

  std::vector<std::string> names_;
  std::size_t target_count_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

} // namespace fibrephi
