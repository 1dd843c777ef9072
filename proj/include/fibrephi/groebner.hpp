#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fibrephi/monomial_order.hpp"
#include "fibrephi/polynomial.hpp"

namespace fibrephi {

/// Reduced, monic Gröbner basis, sorted by increasing leading monomial.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
  std::vector<Monomial> leading;

  bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
};

/// Immutable generator list with a per-order cache of reduced bases.
/// Copies share the cache.
class Ideal {
public:
  /// The zero ideal of no ring; a placeholder until assigned.
  Ideal() : Ideal(RingPtr{}) {}
  explicit Ideal(RingPtr ring) : Ideal(std::move(ring), {}) {}
  /// Zero generators are dropped.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

  const GroebnerBasis& groebner(const MonomialOrder& order) const;
  /// The grevlex basis, used wherever the order does not matter.
  const GroebnerBasis& standard_basis() const { return groebner(MonomialOrder::grevlex()); }

  Ideal operator+(const Ideal& other) const;
  Ideal with(const Polynomial& p) const;
  Ideal with(const std::vector<Polynomial>& ps) const;
  /// Same generators in a ring containing all occurring variable names.
  Ideal lifted(const RingPtr& ring) const;

  std::string to_string() const;
  std::vector<std::string> generator_strings() const;

private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Multivariate division: f = sum(quotients[i] * basis[i]) + remainder, and
/// no term of the remainder is divisible by a leading monomial of the basis.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

Division divide(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

/// Buchberger's algorithm with Gebauer–Möller pair elimination; pairs with the
/// smallest lcm go first.
GroebnerBasis compute_groebner(const RingPtr& ring, std::span<const Polynomial> generators,
                               const MonomialOrder& order);
const GroebnerBasis& reduced_groebner(const Ideal& ideal, const MonomialOrder& order);

bool ideal_member(const Polynomial& f, const Ideal& ideal);
/// f^n in I for some n; decided by 1 in I + (1 - t f) over Q[vars, t].
bool radical_member(const Polynomial& f, const Ideal& ideal);
bool is_unit_ideal(const Ideal& ideal);
/// V(a) = V(b), checked by mutual radical membership of generators.
bool same_radical(const Ideal& a, const Ideal& b);
/// V(a) is contained in V(b).
bool variety_contained(const Ideal& a, const Ideal& b);

/// I intersected with Q[first keep_count variables]; the returned ideal lives
/// in the same ring.
Ideal elimination_ideal(const Ideal& ideal, std::size_t keep_count);

/// I : h^inf together with a certified exponent s: h^s * g in I for every
/// returned generator g.
struct Saturation {
  Ideal ideal;
  unsigned exponent = 0;
};

struct SaturationStats {
  std::uint64_t calls = 0;
  std::uint64_t certified = 0;
};

Saturation saturation(const Ideal& ideal, const Polynomial& h);
SaturationStats saturation_stats();
void reset_saturation_stats();
unsigned saturation_exponent_cap();
void set_saturation_exponent_cap(unsigned cap);

Ideal intersection(const Ideal& a, const Ideal& b);

/// Largest size of a subset S of `variables` such that no monomial in
/// `leading` has its support inside S. -1 if some monomial is 1.
int combinatorial_dimension(std::span<const Monomial> leading, std::uint64_t variables);

/// A largest such subset, as a bitmask.
std::uint64_t maximal_independent_set(std::span<const Monomial> leading, std::uint64_t variables);

/// Dimension of V(I); -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);

} // namespace fibrephi
