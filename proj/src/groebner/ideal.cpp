#include <map>
#include <mutex>

#include "fibrephi/error.hpp"
#include "fibrephi/groebner.hpp"

namespace fibrephi {

struct Ideal::Cache {
  std::mutex mutex;
  std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_))
      throw RingMismatch("generator " + g.to_string() + " is outside the ideal's ring");
    if (!g.is_zero())
      generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->bases.find(order); it != cache_->bases.end())
      return *it->second;
  }
  // Computed outside the lock; a racing computation yields the identical
  // reduced basis, so whichever lands first is kept.
  auto basis = std::make_shared<const GroebnerBasis>(compute_groebner(ring_, generators_, order));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(order, std::move(basis));
  return *it->second;
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_))
    throw RingMismatch("ideal sum across rings");
  auto gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const Polynomial& p) const {
  auto gens = generators_;
  gens.push_back(p);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const std::vector<Polynomial>& ps) const {
  auto gens = generators_;
  gens.insert(gens.end(), ps.begin(), ps.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::lifted(const RingPtr& ring) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_)
    gens.push_back(g.lifted(ring));
  return Ideal(ring, std::move(gens));
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_)
    out.push_back(g.to_string());
  return out;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i)
      s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

} // namespace fibrephi
