#include <algorithm>

#include "fibrephi/error.hpp"
#include "fibrephi/geometry.hpp"

namespace fibrephi {

const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::no:
    return "false";
  case Verdict::yes:
    return "true";
  case Verdict::inconclusive:
    return "inconclusive";
  }
  return "?";
}

Projection Projection::make(RingPtr ring, Ideal target_ideal_in_target_ring) {
  Projection p;
  p.ring = std::move(ring);
  p.target_ring = PolynomialRing::make(p.ring->target_vars(), {});
  p.source_ring = PolynomialRing::make({}, p.ring->source_vars());
  if (!same_ring(target_ideal_in_target_ring.ring(), p.target_ring) &&
      !target_ideal_in_target_ring.is_zero())
    throw RingMismatch("target ideal must live in the target ring");
  p.target_ideal = Ideal(p.target_ring, target_ideal_in_target_ring.generators());
  p.target_ideal_full = p.target_ideal.lifted(p.ring);
  p.target_dim = krull_dimension(p.target_ideal);
  if (p.target_dim < 0) {
    p.target_irreducible = false;
  } else {
    const auto split = split_components_partial(p.target_ideal);
    if (split.complete)
      p.target_irreducible = split.pieces.size() == 1;
  }
  return p;
}

std::uint64_t Projection::source_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = target_count(); i < ring->arity(); ++i)
    mask |= std::uint64_t{1} << i;
  return mask;
}

Polynomial Projection::to_target(const Polynomial& p) const {
  if (!p.involves_only(0, target_count()))
    throw PreconditionError("polynomial involves source variables: " + p.to_string());
  std::vector<std::size_t> map(ring->arity(), 0);
  for (std::size_t i = 0; i < target_count(); ++i)
    map[i] = i;
  return p.remapped(target_ring, map);
}

Polynomial Projection::from_target(const Polynomial& p) const {
  std::vector<std::size_t> map(target_count());
  for (std::size_t i = 0; i < target_count(); ++i)
    map[i] = i;
  return p.remapped(ring, map);
}

Polynomial Projection::to_source(const Polynomial& p) const {
  if (!p.involves_only(target_count(), ring->arity()))
    throw PreconditionError("polynomial involves target variables: " + p.to_string());
  std::vector<std::size_t> map(ring->arity(), 0);
  for (std::size_t i = target_count(); i < ring->arity(); ++i)
    map[i] = i - target_count();
  return p.remapped(source_ring, map);
}

ImageClosure image_closure(const Ideal& J, const Projection& projection) {
  const Ideal eliminated = elimination_ideal(J, projection.target_count());
  std::vector<Polynomial> gens;
  for (const auto& g : eliminated.generators())
    gens.push_back(projection.to_target(g));
  ImageClosure out{Ideal(projection.target_ring, std::move(gens)), -1};
  out.dimension = krull_dimension(out.ideal);
  return out;
}

Fibre fibre_at_point(const Ideal& J, const Projection& projection,
                     const std::vector<Rational>& eta) {
  if (eta.size() != projection.target_count())
    throw PreconditionError("point has " + std::to_string(eta.size()) + " coordinates, expected " +
                            std::to_string(projection.target_count()));
  Assignment target_point;
  for (std::size_t i = 0; i < eta.size(); ++i)
    target_point[i] = eta[i];
  for (const auto& g : projection.target_ideal.generators())
    if (g.evaluate(target_point) != 0)
      throw PreconditionError("point is off the target variety: " + g.to_string() + " != 0");

  std::vector<Polynomial> gens;
  for (const auto& g : J.generators()) {
    Polynomial s = g.specialize(target_point);
    if (!s.is_zero())
      gens.push_back(projection.to_source(s));
  }
  Fibre out{Ideal(projection.source_ring, std::move(gens)), -1};
  out.dimension = krull_dimension(out.ideal);
  return out;
}

std::vector<LeadingCoefficient> relative_leading_coefficients(const Ideal& J,
                                                              const Projection& projection) {
  return relative_leading_coefficients(J, projection, projection.target_ideal);
}

std::vector<LeadingCoefficient> relative_leading_coefficients(const Ideal& J,
                                                              const Projection& projection,
                                                              const Ideal& constraints) {
  const auto order = projection.relative_order();
  const auto& gb = J.groebner(order);
  const std::size_t t = projection.target_count();
  std::vector<LeadingCoefficient> out;
  for (std::size_t e = 0; e < gb.elements.size(); ++e) {
    const Monomial x_lead = gb.leading[e].restricted(t, projection.ring->arity());
    if (x_lead.is_one())
      continue;
    const auto by_x = gb.elements[e].coefficients_in(t, projection.ring->arity());
    const auto it = by_x.find(x_lead);
    if (it == by_x.end())
      throw InternalInconsistency("x-leading monomial missing from its own element");
    LeadingCoefficient lc{projection.to_target(it->second), x_lead, false};
    lc.flagged = radical_member(lc.coefficient, constraints);
    out.push_back(std::move(lc));
  }
  return out;
}

FibredPower fibred_power(const ProjectionSetup& setup, unsigned i) {
  if (i == 0)
    throw PreconditionError("fibred powers start at i = 1");
  const Projection& base = setup.projection();
  const auto targets = base.ring->target_vars();
  const auto sources = base.ring->source_vars();

  std::vector<std::string> taken(targets.begin(), targets.end());
  taken.insert(taken.end(), sources.begin(), sources.end());
  auto unique = [&](std::string name) {
    while (std::find(taken.begin(), taken.end(), name) != taken.end())
      name += '_';
    taken.push_back(name);
    return name;
  };

  std::vector<std::string> copies;
  for (unsigned c = 1; c <= i; ++c)
    for (const auto& s : sources)
      copies.push_back(unique(s + "_" + std::to_string(c)));

  FibredPower power;
  power.i = i;
  power.projection = base;
  power.projection.ring = PolynomialRing::make(targets, copies);
  power.projection.source_ring = PolynomialRing::make({}, copies);
  power.projection.target_ideal_full = base.target_ideal.lifted(power.projection.ring);

  const std::size_t t = targets.size();
  const std::size_t k = sources.size();
  std::vector<Polynomial> gens = power.projection.target_ideal_full.generators();
  for (unsigned c = 0; c < i; ++c) {
    std::vector<std::size_t> map(t + k);
    for (std::size_t v = 0; v < t; ++v)
      map[v] = v;
    for (std::size_t v = 0; v < k; ++v)
      map[t + v] = t + c * k + v;
    for (const auto& g : setup.source_generators())
      gens.push_back(g.remapped(power.projection.ring, map));
  }
  power.ideal = Ideal(power.projection.ring, std::move(gens));
  return power;
}

} // namespace fibrephi
