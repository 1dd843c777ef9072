#include <algorithm>
#include <atomic>

#include "fibrephi/error.hpp"
#include "fibrephi/groebner.hpp"

namespace fibrephi {

namespace {

std::atomic<std::uint64_t> saturation_calls{0};
std::atomic<std::uint64_t> saturation_certified{0};
std::atomic<unsigned> exponent_cap{64};

/// Ring with one extra auxiliary variable appended at the end.
RingPtr with_auxiliary(const RingPtr& ring) { return ring->with_appended({ring->fresh_name("_t")}); }

/// Maps polynomials free of the trailing auxiliary variable back to `ring`.
std::vector<Polynomial> drop_auxiliary(const std::vector<Polynomial>& polys, const RingPtr& ring) {
  std::vector<std::size_t> target(ring->arity() + 1);
  for (std::size_t i = 0; i < ring->arity(); ++i)
    target[i] = i;
  target[ring->arity()] = 0; // never occurs
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys)
    out.push_back(p.remapped(ring, target));
  return out;
}

} // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero())
    throw PreconditionError("S-polynomial of a zero polynomial");
  if (!same_ring(f.ring(), g.ring()))
    throw RingMismatch("S-polynomial across rings");
  const Term& lf = f.leading_term(order);
  const Term& lg = g.leading_term(order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  return f.times_term(lf.monomial.quotient_of(l), Rational(1) / lf.coefficient) -
         g.times_term(lg.monomial.quotient_of(l), Rational(1) / lg.coefficient);
}

Division divide(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  Division d;
  d.remainder = Polynomial(f.ring());
  for (const auto& b : basis) {
    if (b.is_zero())
      throw PreconditionError("division by the zero polynomial");
    d.quotients.emplace_back(f.ring());
  }
  std::vector<Term> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis)
    leads.push_back(b.leading_term(order));

  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term(order);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i].monomial.divides(lt.monomial))
        continue;
      const Monomial m = leads[i].monomial.quotient_of(lt.monomial);
      const Rational c = lt.coefficient / leads[i].coefficient;
      d.quotients[i] = d.quotients[i] + Polynomial::monomial(f.ring(), m, c);
      p = p - basis[i].times_term(m, c);
      divided = true;
      break;
    }
    if (!divided) {
      const auto head = Polynomial::monomial(f.ring(), lt.monomial, lt.coefficient);
      d.remainder = d.remainder + head;
      p = p - head;
    }
  }
  return d;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
  return divide(f, basis, order).remainder;
}

const GroebnerBasis& reduced_groebner(const Ideal& ideal, const MonomialOrder& order) {
  return ideal.groebner(order);
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  if (f.is_zero())
    return true;
  const auto& gb = ideal.standard_basis();
  return normal_form(f, gb.elements, gb.order).is_zero();
}

bool is_unit_ideal(const Ideal& ideal) { return ideal.standard_basis().is_unit(); }

bool radical_member(const Polynomial& f, const Ideal& ideal) {
  if (f.is_zero())
    return true;
  if (ideal.is_zero())
    return false;
  if (ideal_member(f, ideal))
    return true;
  const RingPtr ext = with_auxiliary(ideal.ring());
  const Polynomial t = Polynomial::variable(ext, ext->arity() - 1);
  Ideal probe = ideal.lifted(ext).with(Polynomial::constant(ext, 1) - t * f.lifted(ext));
  return is_unit_ideal(probe);
}

bool variety_contained(const Ideal& a, const Ideal& b) {
  for (const auto& g : b.generators())
    if (!radical_member(g, a))
      return false;
  return true;
}

bool same_radical(const Ideal& a, const Ideal& b) {
  return variety_contained(a, b) && variety_contained(b, a);
}

Ideal elimination_ideal(const Ideal& ideal, std::size_t keep_count) {
  const auto& ring = ideal.ring();
  if (keep_count >= ring->arity())
    return ideal;
  const auto& gb = ideal.groebner(MonomialOrder::elimination(keep_count));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements)
    if (g.involves_only(0, keep_count))
      kept.push_back(g);
  return Ideal(ring, std::move(kept));
}

SaturationStats saturation_stats() { return {saturation_calls.load(), saturation_certified.load()}; }

void reset_saturation_stats() {
  saturation_calls = 0;
  saturation_certified = 0;
}

unsigned saturation_exponent_cap() { return exponent_cap.load(); }
void set_saturation_exponent_cap(unsigned cap) { exponent_cap = cap; }

Saturation saturation(const Ideal& ideal, const Polynomial& h) {
  if (h.is_zero())
    throw PreconditionError("saturation by the zero polynomial");
  ++saturation_calls;
  if (h.is_constant() || ideal.is_zero()) {
    ++saturation_certified;
    return {ideal, 0};
  }
  const RingPtr& ring = ideal.ring();
  const RingPtr ext = with_auxiliary(ring);
  const Polynomial t = Polynomial::variable(ext, ext->arity() - 1);
  Ideal extended = ideal.lifted(ext).with(Polynomial::constant(ext, 1) - t * h.lifted(ext));
  const auto& gb = extended.groebner(MonomialOrder::elimination(ring->arity()));
  if (gb.is_unit()) {
    Saturation unit{Ideal::unit(ring), 0};
    // 1 in I : h^inf means h^s in I; certify it below like any generator.
    const auto& base = ideal.standard_basis();
    Polynomial r = normal_form(Polynomial::constant(ring, 1), base.elements, base.order);
    while (!r.is_zero()) {
      if (++unit.exponent > saturation_exponent_cap())
        throw ResourceError("saturation exponent cap exceeded");
      r = normal_form(h * r, base.elements, base.order);
    }
    ++saturation_certified;
    return unit;
  }
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements)
    if (g.involves_only(0, ring->arity()))
      kept.push_back(g);
  Saturation result{Ideal(ring, drop_auxiliary(kept, ring)), 0};

  const auto& base = ideal.standard_basis();
  for (const auto& g : result.ideal.generators()) {
    unsigned s = 0;
    Polynomial r = normal_form(g, base.elements, base.order);
    while (!r.is_zero()) {
      if (++s > saturation_exponent_cap())
        throw ResourceError("saturation exponent cap exceeded while certifying " + g.to_string());
      r = normal_form(h * r, base.elements, base.order);
    }
    result.exponent = std::max(result.exponent, s);
  }
  ++saturation_certified;
  return result;
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw RingMismatch("intersection across rings");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero())
    return Ideal(ring);
  const RingPtr ext = with_auxiliary(ring);
  const Polynomial t = Polynomial::variable(ext, ext->arity() - 1);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators())
    gens.push_back(t * g.lifted(ext));
  for (const auto& g : b.generators())
    gens.push_back(one_minus_t * g.lifted(ext));
  Ideal combined(ext, std::move(gens));
  const auto& gb = combined.groebner(MonomialOrder::elimination(ring->arity()));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements)
    if (g.involves_only(0, ring->arity()))
      kept.push_back(g);
  return Ideal(ring, drop_auxiliary(kept, ring));
}

namespace {

void search_independent(const std::vector<std::uint64_t>& supports, const std::vector<int>& vars,
                        std::size_t next, std::uint64_t chosen, int size, int& best,
                        std::uint64_t& best_set) {
  if (size > best) {
    best = size;
    best_set = chosen;
  }
  for (std::size_t i = next; i < vars.size(); ++i) {
    if (size + static_cast<int>(vars.size() - i) <= best)
      return;
    const std::uint64_t candidate = chosen | (std::uint64_t{1} << vars[i]);
    bool independent = true;
    for (auto s : supports)
      if ((s & ~candidate) == 0) {
        independent = false;
        break;
      }
    if (independent)
      search_independent(supports, vars, i + 1, candidate, size + 1, best, best_set);
  }
}

/// -1 when some leading monomial is 1.
int independent_search(std::span<const Monomial> leading, std::uint64_t variables,
                       std::uint64_t& best_set) {
  std::vector<std::uint64_t> supports;
  for (const auto& m : leading) {
    const auto s = m.support();
    if (s == 0)
      return -1;
    if ((s & ~variables) == 0)
      supports.push_back(s);
  }
  std::vector<int> vars;
  for (int i = 0; i < 64; ++i)
    if (variables & (std::uint64_t{1} << i))
      vars.push_back(i);
  int best = 0;
  best_set = 0;
  search_independent(supports, vars, 0, 0, 0, best, best_set);
  return best;
}

} // namespace

int combinatorial_dimension(std::span<const Monomial> leading, std::uint64_t variables) {
  std::uint64_t set = 0;
  return independent_search(leading, variables, set);
}

std::uint64_t maximal_independent_set(std::span<const Monomial> leading, std::uint64_t variables) {
  std::uint64_t set = 0;
  if (independent_search(leading, variables, set) < 0)
    throw PreconditionError("no independent set: the ideal is the unit ideal");
  return set;
}

int krull_dimension(const Ideal& ideal) {
  const auto n = ideal.ring()->arity();
  if (ideal.is_zero())
    return static_cast<int>(n);
  const auto& gb = ideal.standard_basis();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return combinatorial_dimension(gb.leading, all);
}

} // namespace fibrephi
