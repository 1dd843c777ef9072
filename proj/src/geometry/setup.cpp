#include "fibrephi/error.hpp"
#include "fibrephi/geometry.hpp"

namespace fibrephi {

namespace {

std::vector<Polynomial> into_target(const Projection& p, const std::vector<Polynomial>& polys,
                                    const char* what) {
  std::vector<Polynomial> out;
  for (const auto& g : polys) {
    if (!same_ring(g.ring(), p.ring))
      throw RingMismatch(std::string(what) + " generator outside the setup ring");
    if (!g.involves_only(0, p.target_count()))
      throw PreconditionError(std::string(what) + " generator involves source variables: " +
                              g.to_string());
    out.push_back(p.to_target(g));
  }
  return out;
}

} // namespace

ProjectionSetup ProjectionSetup::build(RingPtr ring, std::vector<Polynomial> ambient,
                                       bool target_equals_ambient, std::vector<Polynomial> target,
                                       std::vector<Polynomial> source, Attestations attestations) {
  if (ring->target_count() == 0)
    throw PreconditionError("at least one target variable is required");
  if (ring->source_count() == 0)
    throw PreconditionError("at least one source variable is required");
  if (source.empty())
    throw PreconditionError("at least one source generator is required");
  for (const auto& g : source) {
    if (!same_ring(g.ring(), ring))
      throw RingMismatch("source generator outside the setup ring");
    if (g.is_zero())
      throw PreconditionError("source generators must be nonzero");
  }

  // Scratch projection only used for moving polynomials between rings.
  Projection scratch;
  scratch.ring = ring;
  scratch.target_ring = PolynomialRing::make(ring->target_vars(), {});

  ProjectionSetup s;
  const auto ambient_y = into_target(scratch, ambient, "ambient");
  const auto target_y = target_equals_ambient ? ambient_y : into_target(scratch, target, "target");
  s.ambient_ = Ideal(scratch.target_ring, ambient_y);
  s.projection_ = Projection::make(ring, Ideal(scratch.target_ring, target_y));
  s.source_ = std::move(source);
  s.full_ = s.projection_.target_ideal_full.with(s.source_);
  s.target_equals_ambient_ = target_equals_ambient;
  s.attestations_ = attestations;

  if (!target_equals_ambient && !variety_contained(s.projection_.target_ideal, s.ambient_))
    throw PreconditionError("the target variety is not contained in the ambient target");

  s.dims_.N = krull_dimension(s.ambient_);
  s.dims_.n = s.projection_.target_dim;
  s.dims_.k = static_cast<int>(ring->source_count());
  s.dims_.r = static_cast<int>(s.source_.size());
  s.dims_.m = krull_dimension(s.full_);
  s.source_empty_ = s.dims_.m < 0;

  if (!target_equals_ambient) {
    const Ideal cut = s.ambient_.lifted(ring).with(s.source_);
    s.generators_define_source_ = variety_contained(cut, s.projection_.target_ideal_full);
  }
  return s;
}

Fibre fibre_at_point(const ProjectionSetup& setup, const std::vector<Rational>& eta) {
  return fibre_at_point(setup.source_ideal(), setup.projection(), eta);
}

} // namespace fibrephi
