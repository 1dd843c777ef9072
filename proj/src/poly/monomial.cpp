#include "fibrephi/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace fibrephi {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  Monomial m(arity);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

std::uint64_t Monomial::degree_in(std::size_t begin, std::size_t end) const {
  std::uint64_t d = 0;
  for (std::size_t i = begin; i < end; ++i)
    d += exps_[i];
  return d;
}

std::uint64_t Monomial::support() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0)
      mask |= std::uint64_t{1} << i;
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_)
    return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    q.exps_[i] = other.exps_[i] - exps_[i];
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial p(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    p.exps_[i] = exps_[i] + other.exps_[i];
  p.degree_ = degree_ + other.degree_;
  return p;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0)
      return false;
  return true;
}

Monomial Monomial::restricted(std::size_t begin, std::size_t end) const {
  std::vector<Exponent> e(exps_.size(), 0);
  for (std::size_t i = begin; i < end && i < exps_.size(); ++i)
    e[i] = exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::remapped(const std::vector<std::size_t>& target, std::size_t arity) const {
  std::vector<Exponent> e(arity, 0);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0)
      e.at(target.at(i)) += exps_[i];
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace fibrephi
