#include <algorithm>

#include "fibrephi/error.hpp"
#include "fibrephi/groebner.hpp"

namespace fibrephi {

namespace {

struct OrderedPoly {
  std::vector<Term> terms; // decreasing in the engine's order, leading coefficient 1
  std::uint64_t lead_support = 0;

  const Monomial& lm() const { return terms.front().monomial; }
  bool is_constant() const { return terms.size() == 1 && terms.front().monomial.is_one(); }
};

struct CriticalPair {
  std::size_t first;
  std::size_t second;
  Monomial lcm;
};

class Engine {
public:
  Engine(const RingPtr& ring, const MonomialOrder& order) : ring_(ring), order_(order) {}

  GroebnerBasis run(std::span<const Polynomial> generators) {
    std::vector<OrderedPoly> inputs;
    for (const auto& g : generators) {
      if (g.is_zero())
        continue;
      OrderedPoly p;
      p.terms = g.sorted_terms(order_);
      make_monic(p);
      inputs.push_back(std::move(p));
    }
    // Cheap elements first keeps early reductions small.
    std::stable_sort(inputs.begin(), inputs.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
      return order_.compare(a.lm(), b.lm()) < 0;
    });
    for (auto& p : inputs) {
      if (!insert(reduce(std::move(p), npos)))
        return unit_basis();
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [&](const CriticalPair& a, const CriticalPair& b) {
                                     return order_.compare(a.lcm, b.lcm) < 0;
                                   });
      CriticalPair pair = std::move(*best);
      *best = std::move(pairs_.back());
      pairs_.pop_back();
      OrderedPoly s = spoly(store_[pair.first], store_[pair.second], pair.lcm);
      if (!insert(reduce(std::move(s), npos)))
        return unit_basis();
    }
    return finish();
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void make_monic(OrderedPoly& p) const {
    if (p.terms.empty())
      return;
    const Rational lc = p.terms.front().coefficient;
    if (lc != 1)
      for (auto& t : p.terms)
        t.coefficient /= lc;
    p.lead_support = p.lm().support();
  }

  /// a[start..] - c*m*g[1..], where a[start] cancels c*m*lm(g).
  std::vector<Term> subtract_multiple(const std::vector<Term>& a, std::size_t start,
                                      const Rational& c, const Monomial& m,
                                      const std::vector<Term>& g) const {
    std::vector<Term> out;
    out.reserve(a.size() - start + g.size());
    std::size_t i = start + 1, j = 1;
    while (i < a.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Monomial gm = g[j].monomial * m;
      if (i == a.size()) {
        out.push_back({std::move(gm), -c * g[j].coefficient});
        ++j;
        continue;
      }
      const auto cmp = order_.compare(a[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(gm), -c * g[j].coefficient});
        ++j;
      } else {
        Rational s = a[i].coefficient - c * g[j].coefficient;
        if (s != 0)
          out.push_back({std::move(gm), std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t find_divisor(const Monomial& m, std::size_t skip) const {
    const std::uint64_t mask = m.support();
    for (std::size_t idx : basis_) {
      if (idx == skip)
        continue;
      const auto& g = store_[idx];
      if ((g.lead_support & ~mask) == 0 && g.lm().divides(m))
        return idx;
    }
    return npos;
  }

  /// Full reduction against the active basis (minus `skip`), made monic.
  OrderedPoly reduce(OrderedPoly p, std::size_t skip) const {
    std::vector<Term> done;
    std::vector<Term> cur = std::move(p.terms);
    std::size_t pos = 0;
    while (pos < cur.size()) {
      const std::size_t d = find_divisor(cur[pos].monomial, skip);
      if (d == npos) {
        done.push_back(std::move(cur[pos]));
        ++pos;
        continue;
      }
      const auto& g = store_[d];
      const Monomial m = g.lm().quotient_of(cur[pos].monomial);
      cur = subtract_multiple(cur, pos, cur[pos].coefficient, m, g.terms);
      pos = 0;
    }
    p.terms = std::move(done);
    make_monic(p);
    check_limits(p);
    return p;
  }

  void check_limits(const OrderedPoly& p) const {
    const auto limits = resource_limits();
    if (limits.max_terms != 0 && p.terms.size() > limits.max_terms)
      throw ResourceError("term-count cap exceeded during Groebner basis computation");
    if (limits.max_degree != 0)
      for (const auto& t : p.terms)
        if (t.monomial.degree() > limits.max_degree)
          throw ResourceError("degree cap exceeded during Groebner basis computation");
  }

  OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g, const Monomial& lcm) const {
    const Monomial mf = f.lm().quotient_of(lcm);
    const Monomial mg = g.lm().quotient_of(lcm);
    std::vector<Term> a;
    a.reserve(f.terms.size());
    for (const auto& t : f.terms)
      a.push_back({t.monomial * mf, t.coefficient});
    OrderedPoly s;
    s.terms = subtract_multiple(a, 0, Rational(1), mg, g.terms);
    return s;
  }

  /// Returns false when p is a nonzero constant (unit ideal).
  bool insert(OrderedPoly p) {
    if (p.terms.empty())
      return true;
    if (p.is_constant())
      return false;
    const std::size_t h = store_.size();
    store_.push_back(std::move(p));
    update(h);
    return true;
  }

  CriticalPair make_pair(std::size_t h, std::size_t g) const {
    const auto& ph = store_[h];
    const auto& pg = store_[g];
    return {h, g, ph.lm().lcm(pg.lm())};
  }

  // Gebauer–Möller installation of a new basis element.
  void update(std::size_t h) {
    const Monomial& lh = store_[h].lm();
    std::vector<CriticalPair> fresh;
    fresh.reserve(basis_.size());
    for (std::size_t g : basis_)
      fresh.push_back(make_pair(h, g));

    std::vector<CriticalPair> kept;
    while (!fresh.empty()) {
      CriticalPair p = std::move(fresh.back());
      fresh.pop_back();
      bool keep = lh.coprime(store_[p.second].lm());
      if (!keep) {
        keep = true;
        for (const auto& q : fresh)
          if (q.lcm.divides(p.lcm)) {
            keep = false;
            break;
          }
        if (keep)
          for (const auto& q : kept)
            if (q.lcm.divides(p.lcm)) {
              keep = false;
              break;
            }
      }
      if (keep)
        kept.push_back(std::move(p));
    }

    std::vector<CriticalPair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      const bool redundant = lh.divides(p.lcm) &&
                             store_[p.first].lm().lcm(lh) != p.lcm &&
                             store_[p.second].lm().lcm(lh) != p.lcm;
      if (!redundant)
        next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!lh.coprime(store_[p.second].lm()))
        next.push_back(std::move(p));
    pairs_ = std::move(next);

    std::vector<std::size_t> active;
    active.reserve(basis_.size() + 1);
    for (std::size_t g : basis_)
      if (!lh.divides(store_[g].lm()))
        active.push_back(g);
    active.push_back(h);
    basis_ = std::move(active);
  }

  GroebnerBasis unit_basis() const {
    GroebnerBasis gb;
    gb.order = order_;
    gb.elements.push_back(Polynomial::constant(ring_, 1));
    gb.leading.emplace_back(ring_->arity());
    return gb;
  }

  GroebnerBasis finish() {
    // The active basis is minimal; reduce every tail against the others.
    std::vector<OrderedPoly> reduced;
    reduced.reserve(basis_.size());
    for (std::size_t idx : basis_)
      reduced.push_back(reduce(store_[idx], idx));
    std::sort(reduced.begin(), reduced.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
      return order_.compare(a.lm(), b.lm()) < 0;
    });
    GroebnerBasis gb;
    gb.order = order_;
    for (auto& p : reduced) {
      gb.leading.push_back(p.lm());
      gb.elements.emplace_back(ring_, std::move(p.terms));
    }
    return gb;
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<OrderedPoly> store_;
  std::vector<std::size_t> basis_;
  std::vector<CriticalPair> pairs_;
};

} // namespace

GroebnerBasis compute_groebner(const RingPtr& ring, std::span<const Polynomial> generators,
                               const MonomialOrder& order) {
  for (const auto& g : generators)
    if (!same_ring(g.ring(), ring))
      throw RingMismatch("generator outside the ideal's ring");
  return Engine(ring, order).run(generators);
}

} // namespace fibrephi
