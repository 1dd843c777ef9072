#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace fibrephi {

/// Exponent vector, one entry per ring variable.
class Monomial {
public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  std::uint64_t degree_in(std::size_t begin, std::size_t end) const;
  /// Bitmask of variables with positive exponent (arity <= 64).
  std::uint64_t support() const;

  bool divides(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Keeps exponents in [begin, end), zeroing the rest.
  Monomial restricted(std::size_t begin, std::size_t end) const;
  /// Re-indexes into a ring of arity `arity`; `target[i]` is the new index of variable i.
  Monomial remapped(const std::vector<std::size_t>& target, std::size_t arity) const;

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }
  /// Structural order (lexicographic on the raw vector); not a monomial order.
  std::strong_ordering operator<=>(const Monomial& other) const noexcept {
    return exps_ <=> other.exps_;
  }

  std::size_t hash() const noexcept;

private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

} // namespace fibrephi
