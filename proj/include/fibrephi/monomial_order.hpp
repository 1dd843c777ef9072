#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "fibrephi/monomial.hpp"

namespace fibrephi {

/// Lexicographic, graded reverse lexicographic, or a two-block product order.
///
/// Variables are ranked by their ring index: variable 0 is the largest.
/// A block order splits the variables at `boundary` into a head block
/// [0, boundary) and a tail block [boundary, arity); the dominating block is
/// compared first with its own inner kind, ties broken by the other block.
/// With `tail_dominates` the tail is eliminated: every monomial involving a
/// tail variable exceeds every monomial free of them.
struct MonomialOrder {
  enum class Kind : unsigned char { lex, grevlex, block };

  Kind kind = Kind::grevlex;
  std::size_t boundary = 0;
  Kind head = Kind::grevlex;
  Kind tail = Kind::grevlex;
  bool tail_dominates = true;

  static MonomialOrder lex() { return {Kind::lex}; }
  static MonomialOrder grevlex() { return {Kind::grevlex}; }
  static MonomialOrder block(std::size_t boundary, Kind head, Kind tail, bool tail_dominates);
  /// Tail [boundary, arity) eliminated, grevlex inside both blocks.
  static MonomialOrder elimination(std::size_t boundary) {
    return block(boundary, Kind::grevlex, Kind::grevlex, true);
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

  auto operator<=>(const MonomialOrder&) const = default;
};

} // namespace fibrephi
