#include <algorithm>

#include "fibrephi/error.hpp"
#include "fibrephi/geometry.hpp"

namespace fibrephi {

const char* to_string(PurityCheck::Status s) {
  switch (s) {
  case PurityCheck::Status::pure:
    return "pure";
  case PurityCheck::Status::mixed:
    return "mixed";
  case PurityCheck::Status::unconfirmed:
    return "unconfirmed";
  }
  return "?";
}

Ideal variety_difference(const Ideal& a, const Ideal& b) {
  std::optional<Ideal> out;
  for (const auto& g : b.standard_basis().elements) {
    if (radical_member(g, a))
      continue;
    Ideal part = saturation(a, g).ideal;
    out = out ? intersection(*out, part) : part;
  }
  return out ? *out : Ideal::unit(a.ring());
}

namespace {

std::uint64_t all_variables(const RingPtr& ring) {
  const auto n = ring->arity();
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Product of the leading coefficients of a basis of P over Q(S), S a
/// maximal independent set; saturating by it keeps the top-dimensional
/// components in which S stays independent.
Polynomial independent_denominator(const Ideal& P, std::uint64_t S) {
  const auto& ring = P.ring();
  std::vector<std::size_t> head, tail;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    (S & (std::uint64_t{1} << i) ? head : tail).push_back(i);
  std::vector<std::string> head_names, tail_names;
  for (auto i : head)
    head_names.push_back(ring->name(i));
  for (auto i : tail)
    tail_names.push_back(ring->name(i));
  const RingPtr permuted = PolynomialRing::make(head_names, tail_names);

  std::vector<std::size_t> forward(ring->arity()), back(ring->arity());
  for (std::size_t i = 0; i < head.size(); ++i)
    forward[head[i]] = i;
  for (std::size_t i = 0; i < tail.size(); ++i)
    forward[tail[i]] = head.size() + i;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    back[forward[i]] = i;

  std::vector<Polynomial> gens;
  for (const auto& g : P.generators())
    gens.push_back(g.remapped(permuted, forward));
  const Ideal moved(permuted, std::move(gens));
  const auto& gb = moved.groebner(MonomialOrder::elimination(head.size()));

  Polynomial product = Polynomial::constant(ring, 1);
  std::vector<Polynomial> seen;
  for (std::size_t e = 0; e < gb.elements.size(); ++e) {
    const Monomial lead = gb.leading[e].restricted(head.size(), ring->arity());
    if (lead.is_one())
      continue;
    const auto coeff = gb.elements[e].coefficients_in(head.size(), ring->arity()).at(lead);
    if (coeff.is_constant())
      continue;
    const auto h = coeff.remapped(ring, back).primitive();
    if (std::find(seen.begin(), seen.end(), h) != seen.end())
      continue;
    seen.push_back(h);
    product = product * h;
  }
  return product;
}

/// Splits V(P) into pure-dimensional pieces, highest dimension first.
bool equidimensional(const Ideal& P, std::size_t depth, const SplitOptions& options,
                     std::vector<Ideal>& out) {
  if (is_unit_ideal(P))
    return true;
  if (depth > options.max_depth)
    return false;
  const int d = krull_dimension(P);
  if (d == 0 || P.is_zero()) {
    out.push_back(P);
    return true;
  }
  const auto S = maximal_independent_set(P.standard_basis().leading, all_variables(P.ring()));
  const Polynomial h = independent_denominator(P, S);
  if (h.is_constant()) {
    out.push_back(P);
    return true;
  }
  Ideal top = saturation(P, h).ideal;
  if (variety_contained(P, top)) {
    out.push_back(P);
    return true;
  }
  out.push_back(top);
  return equidimensional(variety_difference(P, top), depth + 1, options, out);
}

std::vector<Polynomial> splitting_candidates(const Ideal& P) {
  const auto& ring = P.ring();
  std::vector<Polynomial> out;
  auto add = [&](Polynomial p) {
    if (p.is_constant())
      return;
    p = p.primitive();
    if (std::find(out.begin(), out.end(), p) == out.end())
      out.push_back(std::move(p));
  };
  for (std::size_t v = 0; v < ring->arity(); ++v)
    add(Polynomial::variable(ring, v));
  for (const auto& g : P.standard_basis().elements) {
    for (std::size_t v = 0; v < ring->arity(); ++v) {
      const auto deg = g.degree_in(v);
      if (deg == 0)
        continue;
      const Monomial power = Monomial::variable(ring->arity(), v, static_cast<Monomial::Exponent>(deg));
      add(g.coefficients_in(v, v + 1).at(power));
    }
  }
  return out;
}

/// Splits a pure piece along zero divisors.
bool zero_divisor_split(const Ideal& P, std::size_t depth, const SplitOptions& options,
                        std::vector<Ideal>& out) {
  if (depth > options.max_depth)
    return false;
  for (const auto& h : splitting_candidates(P)) {
    if (radical_member(h, P))
      continue;
    Ideal away = saturation(P, h).ideal;
    if (variety_contained(P, away))
      continue;
    Ideal along = variety_difference(P, away);
    return zero_divisor_split(away, depth + 1, options, out) &&
           zero_divisor_split(along, depth + 1, options, out);
  }
  out.push_back(P);
  return true;
}

} // namespace

ComponentSplit split_components_partial(const Ideal& J, const SplitOptions& options) {
  ComponentSplit result;
  std::vector<Ideal> pure;
  result.complete = equidimensional(J, 0, options, pure);
  if (!options.zero_divisor_splitting) {
    result.pieces = std::move(pure);
    return result;
  }
  for (const auto& P : pure) {
    std::vector<Ideal> pieces;
    if (!zero_divisor_split(P, 0, options, pieces))
      result.complete = false;
    for (auto& piece : pieces)
      result.pieces.push_back(std::move(piece));
  }
  return result;
}

std::vector<Ideal> split_components(const Ideal& J, const SplitOptions& options) {
  auto split = split_components_partial(J, options);
  if (!split.complete)
    throw ResourceError("component splitting depth cap exceeded");
  return std::move(split.pieces);
}

PurityCheck pure_dimension_check(const Ideal& J, const SplitOptions& options) {
  SplitOptions equi = options;
  equi.zero_divisor_splitting = false;
  const auto split = split_components_partial(J, equi);
  PurityCheck out;
  for (const auto& piece : split.pieces)
    out.piece_dims.push_back(krull_dimension(piece));
  std::sort(out.piece_dims.rbegin(), out.piece_dims.rend());
  out.dimension = krull_dimension(J);
  const bool all_equal = std::all_of(out.piece_dims.begin(), out.piece_dims.end(),
                                     [&](int d) { return d == out.dimension; });
  if (!all_equal)
    out.status = PurityCheck::Status::mixed;
  else if (split.complete)
    out.status = PurityCheck::Status::pure;
  return out;
}

} // namespace fibrephi
