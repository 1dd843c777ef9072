#include <algorithm>
#include <set>

#include "fibrephi/error.hpp"
#include "fibrephi/geometry.hpp"

namespace fibrephi {

namespace {

using Univariate = std::vector<Rational>; // coefficient of x^i at index i

void trim(Univariate& u) {
  while (!u.empty() && u.back() == 0)
    u.pop_back();
}

Univariate to_univariate(const Polynomial& p, std::size_t v) {
  Univariate u;
  for (const auto& t : p.terms()) {
    const auto e = t.monomial[v];
    if (u.size() <= e)
      u.resize(e + 1);
    u[e] += t.coefficient;
  }
  trim(u);
  return u;
}

Univariate remainder(Univariate a, const Univariate& b) {
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate gcd(Univariate a, Univariate b) {
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational evaluate(const Univariate& u, const Rational& x) {
  Rational acc = 0;
  for (auto it = u.rbegin(); it != u.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

/// Positive divisors of |n|; empty when |n| is too large to factor by trial division.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  static const mpz_class limit("1000000000000");
  if (n == 0 || n > limit)
    return {};
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    small.push_back(d);
    if (d * d != n)
      large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Rational> rational_roots(Univariate u) {
  std::vector<Rational> roots;
  trim(u);
  if (u.size() < 2)
    return roots;
  std::size_t low = 0;
  while (u[low] == 0)
    ++low;
  if (low > 0) {
    roots.push_back(0);
    u.erase(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (u.size() < 2)
    return roots;
  mpz_class den = 1;
  for (const auto& c : u)
    den = lcm(den, c.get_den());
  std::vector<mpz_class> ints;
  for (const auto& c : u)
    ints.push_back(mpz_class(c * den));
  std::set<Rational> found;
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational candidate(mpz_class(sign * p), q);
        candidate.canonicalize();
        if (evaluate(u, candidate) == 0)
          found.insert(candidate);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

Rational random_value(std::mt19937_64& rng, unsigned height) {
  // Half of the draws use the window [-10, 10].
  const unsigned h = (rng() & 1) ? std::min(height, 10u) : height;
  const auto span = 2 * static_cast<std::uint64_t>(h) + 1;
  return Rational(static_cast<long>(rng() % span) - static_cast<long>(h));
}

} // namespace

std::optional<std::vector<Rational>> sample_point(const Ideal& constraints,
                                                  const std::vector<Polynomial>& inequations,
                                                  std::mt19937_64& rng, unsigned height) {
  const auto& ring = constraints.ring();
  const std::size_t n = ring->arity();
  const auto& gb = constraints.groebner(MonomialOrder::lex());
  if (gb.is_unit())
    return std::nullopt;

  Assignment point;
  for (std::size_t v = n; v-- > 0;) {
    Univariate common;
    bool constrained = false;
    for (const auto& g : gb.elements) {
      if (!g.involves_only(v, n) || g.degree_in(v) == 0)
        continue;
      Univariate u = to_univariate(g.specialize(point), v);
      if (u.empty())
        continue;
      common = constrained ? gcd(common, u) : u;
      constrained = true;
    }
    if (!constrained) {
      point[v] = random_value(rng, height);
      continue;
    }
    const auto roots = rational_roots(common);
    if (roots.empty())
      return std::nullopt;
    point[v] = roots[rng() % roots.size()];
  }

  for (const auto& g : constraints.generators())
    if (g.evaluate(point) != 0)
      return std::nullopt;
  for (const auto& h : inequations)
    if (h.evaluate(point) == 0)
      return std::nullopt;
  std::vector<Rational> out(n);
  for (const auto& [i, value] : point)
    out[i] = value;
  return out;
}

OracleReport check_stratification(const Ideal& J, const Projection& projection,
                                  const Stratification& strat, const OracleOptions& options) {
  std::mt19937_64 rng(options.seed);
  OracleReport report;
  for (const auto& stratum : strat.strata) {
    for (const auto& cell : stratum.cells) {
      OracleCell oc{stratum.j, cell.describe(), 0, 0, 0};
      while (oc.attempts < options.attempts_per_cell && oc.points < options.points_per_cell) {
        ++oc.attempts;
        const auto eta = sample_point(cell.constraints, cell.inequations, rng, options.height);
        if (!eta)
          continue;
        ++oc.points;
        if (fibre_at_point(J, projection, *eta).dimension != stratum.j)
          ++oc.mismatches;
      }
      report.points += oc.points;
      report.mismatches += oc.mismatches;
      if (oc.points == 0)
        ++report.skipped_cells;
      report.cells.push_back(std::move(oc));
    }
  }
  return report;
}

} // namespace fibrephi
