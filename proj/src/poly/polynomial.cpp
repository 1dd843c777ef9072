#include "fibrephi/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "fibrephi/error.hpp"

namespace fibrephi {

namespace {

std::mutex limits_mutex;
ResourceLimits current_limits;

const MonomialOrder& default_order() {
  static const MonomialOrder order = MonomialOrder::grevlex();
  return order;
}

bool default_greater(const Term& a, const Term& b) {
  return default_order().greater(a.monomial, b.monomial);
}

std::vector<Term> merge_sum(const std::vector<Term>& a, const std::vector<Term>& b,
                            const Rational& b_factor) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({b[j].monomial, b[j].coefficient * b_factor});
      ++j;
      continue;
    }
    const auto c = default_order().compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, b[j].coefficient * b_factor});
      ++j;
    } else {
      Rational s = a[i].coefficient + b[j].coefficient * b_factor;
      if (s != 0)
        out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

ResourceLimits resource_limits() {
  std::lock_guard lock(limits_mutex);
  return current_limits;
}

void set_resource_limits(const ResourceLimits& limits) {
  std::lock_guard lock(limits_mutex);
  current_limits = limits;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (auto& t : terms) {
    if (t.monomial.arity() != ring_->arity())
      throw RingMismatch("term arity does not match ring");
    acc[t.monomial] += t.coefficient;
  }
  terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) {
      c.canonicalize();
      terms_.push_back({m, c});
    }
  }
  std::sort(terms_.begin(), terms_.end(), default_greater);
  check_limits();
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
  Polynomial p(ring);
  if (value != 0)
    p.terms_.push_back({Monomial(ring->arity()), value});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->arity(), index), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& coefficient) {
  if (m.arity() != ring->arity())
    throw RingMismatch("monomial arity does not match ring");
  Polynomial p(ring);
  if (coefficient != 0)
    p.terms_.push_back({std::move(m), coefficient});
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_value() const {
  if (!is_constant())
    throw PreconditionError("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.front().coefficient;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_)
    d = std::max(d, t.monomial.degree());
  return d;
}

std::uint64_t Polynomial::degree_in(std::size_t variable) const {
  std::uint64_t d = 0;
  for (const auto& t : terms_)
    d = std::max<std::uint64_t>(d, t.monomial[variable]);
  return d;
}

std::uint64_t Polynomial::support() const {
  std::uint64_t mask = 0;
  for (const auto& t : terms_)
    mask |= t.monomial.support();
  return mask;
}

bool Polynomial::involves_only(std::size_t begin, std::size_t end) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.monomial.arity(); ++i)
      if (t.monomial[i] != 0 && (i < begin || i >= end))
        return false;
  return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty())
    throw PreconditionError("leading term of the zero polynomial");
  if (order == default_order())
    return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial))
      best = &t;
  return *best;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  if (!(order == default_order()))
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return out;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_))
    throw RingMismatch("operands belong to different rings");
}

void Polynomial::check_limits() const {
  const auto limits = resource_limits();
  if (limits.max_terms != 0 && terms_.size() > limits.max_terms)
    throw ResourceError("term-count cap exceeded (" + std::to_string(terms_.size()) + " > " +
                        std::to_string(limits.max_terms) + ")");
  if (limits.max_degree != 0 && !terms_.empty() && total_degree() > limits.max_degree)
    throw ResourceError("degree cap exceeded (" + std::to_string(total_degree()) + " > " +
                        std::to_string(limits.max_degree) + ")");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_)
    t.coefficient = -t.coefficient;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(other);
  Polynomial p(ring_);
  p.terms_ = merge_sum(terms_, other.terms_, Rational(1));
  p.check_limits();
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_ring(other);
  Polynomial p(ring_);
  p.terms_ = merge_sum(terms_, other.terms_, Rational(-1));
  p.check_limits();
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      acc[a.monomial * b.monomial] += a.coefficient * b.coefficient;
  Polynomial p(ring_);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0)
      p.terms_.push_back({m, std::move(c)});
  std::sort(p.terms_.begin(), p.terms_.end(), default_greater);
  p.check_limits();
  return p;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0)
    return Polynomial(ring_);
  Polynomial p = *this;
  for (auto& t : p.terms_)
    t.coefficient *= factor;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& coefficient) const {
  if (coefficient == 0)
    return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : terms_)
    p.terms_.push_back({t.monomial * m, t.coefficient * coefficient});
  p.check_limits();
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1u;
    if (exponent != 0)
      base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty())
    return *this;
  const Rational lc = leading_term(order).coefficient;
  return scaled(Rational(1) / lc);
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty())
    return *this;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  return scaled(factor);
}

Polynomial Polynomial::specialize(const Assignment& assignment) const {
  for (const auto& [index, value] : assignment)
    if (index >= ring_->arity())
      throw RingMismatch("assignment names a variable outside the ring");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Exponent> e = t.monomial.exponents();
    Rational c = t.coefficient;
    for (const auto& [index, value] : assignment) {
      if (e[index] == 0)
        continue;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), value.get_num_mpz_t(), e[index]);
      mpz_pow_ui(power.get_den_mpz_t(), value.get_den_mpz_t(), e[index]);
      c *= power;
      e[index] = 0;
    }
    out.push_back({Monomial(std::move(e)), std::move(c)});
  }
  return Polynomial(ring_, std::move(out));
}

Rational Polynomial::evaluate(const Assignment& assignment) const {
  const Polynomial p = specialize(assignment);
  if (!p.is_constant())
    throw PreconditionError("evaluation leaves free variables: " + p.to_string());
  return p.constant_value();
}

Polynomial Polynomial::remapped(RingPtr ring, const std::vector<std::size_t>& target) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_)
    out.push_back({t.monomial.remapped(target, ring->arity()), t.coefficient});
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::lifted(const RingPtr& ring) const {
  std::vector<std::size_t> target(ring_->arity(), 0);
  const auto used = support();
  for (std::size_t i = 0; i < ring_->arity(); ++i) {
    auto idx = ring->index_of(ring_->name(i));
    if (idx) {
      target[i] = *idx;
    } else if (used & (std::uint64_t{1} << i)) {
      throw RingMismatch("variable '" + ring_->name(i) + "' is missing from the target ring");
    }
  }
  return remapped(ring, target);
}

std::map<Monomial, Polynomial> Polynomial::coefficients_in(std::size_t begin,
                                                           std::size_t end) const {
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Monomial key = t.monomial.restricted(begin, end);
    std::vector<Monomial::Exponent> rest = t.monomial.exponents();
    for (std::size_t i = begin; i < end && i < rest.size(); ++i)
      rest[i] = 0;
    groups[key].push_back({Monomial(std::move(rest)), t.coefficient});
  }
  std::map<Monomial, Polynomial> out;
  for (auto& [key, terms] : groups)
    out.emplace(key, Polynomial(ring_, std::move(terms)));
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    const bool negative = c < 0;
    if (first) {
      if (negative)
        os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative)
      c = -c;
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      const auto e = t.monomial[i];
      if (e == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += ring_->name(i);
      if (e > 1)
        mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      os << fibrephi::to_string(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << fibrephi::to_string(c) << '*' << mono;
    }
  }
  return os.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

} // namespace fibrephi
