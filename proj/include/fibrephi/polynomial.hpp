#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fibrephi/monomial.hpp"
#include "fibrephi/monomial_order.hpp"
#include "fibrephi/ring.hpp"

namespace fibrephi {

using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Rational coefficient;

  bool operator==(const Term& other) const {
    return monomial == other.monomial && coefficient == other.coefficient;
  }
};

/// Process-wide caps on polynomial growth; 0 means unbounded.
struct ResourceLimits {
  std::uint64_t max_degree = 0;
  std::size_t max_terms = 0;
};

ResourceLimits resource_limits();
void set_resource_limits(const ResourceLimits& limits);

/// Restores the previous limits on destruction.
class ScopedResourceLimits {
public:
  explicit ScopedResourceLimits(const ResourceLimits& limits)
      : saved_(resource_limits()) {
    set_resource_limits(limits);
  }
  ~ScopedResourceLimits() { set_resource_limits(saved_); }
  ScopedResourceLimits(const ScopedResourceLimits&) = delete;
  ScopedResourceLimits& operator=(const ScopedResourceLimits&) = delete;

private:
  ResourceLimits saved_;
};

/// Partial map variable index -> value.
using Assignment = std::map<std::size_t, Rational>;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted in decreasing grevlex order with no zero
/// coefficients and no repeated monomials, so equality is structural.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Normalizes: combines repeated monomials, drops zeros, sorts.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& coefficient = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term if is_constant(), else throws.
  Rational constant_value() const;
  std::uint64_t total_degree() const;
  std::uint64_t degree_in(std::size_t variable) const;
  /// Bitmask of variables occurring in some term.
  std::uint64_t support() const;
  bool involves_only(std::size_t begin, std::size_t end) const;

  /// Order-maximal term. Throws PreconditionError on the zero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  /// Terms sorted in decreasing `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_term(const Monomial& m, const Rational& coefficient) const;
  Polynomial pow(unsigned exponent) const;
  /// Divides by the coefficient of the `order`-leading term.
  Polynomial monic(const MonomialOrder& order) const;
  /// Scales by a positive rational so that coefficients are coprime integers.
  Polynomial primitive() const;

  /// Substitutes the assigned variables; the ring is unchanged.
  Polynomial specialize(const Assignment& assignment) const;
  /// Full evaluation; requires every occurring variable to be assigned.
  Rational evaluate(const Assignment& assignment) const;
  /// Moves into `ring`; `target[i]` is the new index of variable i. Variables
  /// occurring in the polynomial must map to valid indices.
  Polynomial remapped(RingPtr ring, const std::vector<std::size_t>& target) const;
  /// Moves into a ring whose variables are a superset (matched by name).
  Polynomial lifted(const RingPtr& ring) const;

  /// Coefficients of the powers of a block of variables: groups terms by
  /// their restriction to [begin, end).
  std::map<Monomial, Polynomial> coefficients_in(std::size_t begin, std::size_t end) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

private:
  void check_ring(const Polynomial& other) const;
  void check_limits() const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string to_string(const Rational& value);

/// Parses the polynomial grammar: rational literals `a` or `a/b`, variable
/// names, `+ - * ^` and parentheses. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated list of polynomials; `0` alone yields an empty list when
/// `drop_zero` is set.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              bool drop_zero);

} // namespace fibrephi
