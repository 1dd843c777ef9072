#include <algorithm>
#include <map>

#include "fibrephi/error.hpp"
#include "fibrephi/invariant.hpp"

namespace fibrephi {

ExtendedNat::ExtendedNat(std::int64_t value) : value_(value) {
  if (value < 0)
    throw PreconditionError("negative value for a natural number");
}

std::int64_t ExtendedNat::value() const {
  if (!value_)
    throw PreconditionError("infinity has no finite value");
  return *value_;
}

std::string ExtendedNat::to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }

std::strong_ordering ExtendedNat::operator<=>(const ExtendedNat& other) const {
  if (!value_ || !other.value_)
    return !value_ <=> !other.value_;
  return *value_ <=> *other.value_;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

} // namespace

ExtendedNat phi_upper(const Stratification& strat, int m, int n) {
  ExtendedNat best = ExtendedNat::infinity();
  for (const auto& s : strat.strata) {
    if (s.j <= m - n)
      continue;
    const auto value = floor_div(n - s.image_dim - 1, s.j - (m - n));
    if (value < 0)
      throw InternalInconsistency("negative term in the upper bound at j = " + std::to_string(s.j));
    best = std::min(best, ExtendedNat(value));
  }
  return best;
}

ExtendedNat phi_lower(const Stratification& strat, int N, int k, int r) {
  const auto lambda = strat.lambda();
  ExtendedNat best = ExtendedNat::infinity();
  for (const auto& s : strat.strata) {
    if (s.j == lambda)
      continue;
    const int denominator = s.j - (k - r);
    if (denominator <= 0)
      throw InternalInconsistency("nonpositive denominator in the lower bound at j = " +
                                  std::to_string(s.j));
    const auto value = floor_div(N - s.image_dim - 1, denominator);
    if (value < 0)
      throw InternalInconsistency("negative term in the lower bound at j = " + std::to_string(s.j));
    best = std::min(best, ExtendedNat(value));
  }
  return best;
}

std::int64_t multiplicity_bound(int d, int q) {
  if (d < 1 || q < 1)
    throw PreconditionError("multiplicity bound needs d >= 1 and q >= 1");
  return (d - 1) / q;
}

const char* to_string(ExactnessTag tag) {
  switch (tag) {
  case ExactnessTag::smooth_target:
    return "smooth-target";
  case ExactnessTag::bounds_meet:
    return "bounds-meet";
  case ExactnessTag::complete_intersection:
    return "complete-intersection";
  case ExactnessTag::curve_target:
    return "curve-target";
  case ExactnessTag::fibred_power_determined:
    return "fibred-power-determined";
  }
  return "?";
}

PowerScan phi_by_fibred_powers(const ProjectionSetup& setup, unsigned i_max) {
  if (i_max == 0)
    throw PreconditionError("the fibred-power scan needs i_max >= 1");
  PowerScan scan;
  for (unsigned i = 1; i <= i_max; ++i) {
    const auto power = fibred_power(setup, i);
    const auto v = has_vertical_component(power.ideal, power.projection);
    scan.checks.push_back({i, v.verdict, v.reason});
    if (v.verdict == Verdict::no) {
      scan.at_least = i;
      continue;
    }
    if (v.verdict == Verdict::yes)
      scan.exact = ExtendedNat(i - 1);
    break;
  }
  return scan;
}

std::optional<std::vector<Rational>> single_point(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  if (krull_dimension(ideal) != 0)
    return std::nullopt;
  std::vector<Rational> point;
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    std::vector<std::string> rest;
    std::vector<std::size_t> map(ring->arity());
    for (std::size_t i = 0, slot = 1; i < ring->arity(); ++i) {
      if (i == v) {
        map[i] = 0;
      } else {
        map[i] = slot++;
        rest.push_back(ring->name(i));
      }
    }
    const RingPtr moved = PolynomialRing::make({ring->name(v)}, rest);
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators())
      gens.push_back(g.remapped(moved, map));
    const auto eliminated = elimination_ideal(Ideal(moved, std::move(gens)), 1);
    if (eliminated.generators().size() != 1)
      return std::nullopt;
    const auto& p = eliminated.generators().front();
    const auto e = p.degree_in(0);
    if (e == 0)
      return std::nullopt;
    Rational top = 0, next = 0;
    for (const auto& t : p.terms()) {
      if (t.monomial[0] == e)
        top = t.coefficient;
      else if (t.monomial[0] + 1 == e)
        next = t.coefficient;
    }
    point.push_back(-next / (Rational(static_cast<long>(e)) * top));
  }
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    const auto line = Polynomial::variable(ring, v) - Polynomial::constant(ring, point[v]);
    if (!radical_member(line, ideal))
      return std::nullopt;
  }
  return point;
}

namespace {

bool complete_intersection_premises(const ProjectionSetup& setup, const PurityCheck& purity) {
  const auto& d = setup.dims();
  const auto& a = setup.attestations();
  return d.r == d.n + d.k - d.m && purity.pure() && a.target_locally_irreducible &&
         a.target_pure_dimensional;
}

MultiplicityResult certify_multiplicity(const ProjectionSetup& setup, const PhiReport& report) {
  MultiplicityResult out;
  const auto& dims = setup.dims();
  const auto& a = setup.attestations();

  std::string route;
  if (setup.target_ideal().is_zero())
    route = "smooth-target";
  else if (complete_intersection_premises(setup, report.source_purity))
    route = "complete-intersection";
  else if (dims.n == 1 && a.target_locally_irreducible)
    route = "curve-target";
  if (route.empty()) {
    out.reason = "no admissible route: the target is not affine space, the setup is not a "
                 "complete intersection, and the target is not an attested curve";
    return out;
  }
  if (!report.source_purity.pure()) {
    out.reason = "the source is not certified pure-dimensional";
    return out;
  }
  if (!report.target_purity.pure() && !a.target_pure_dimensional) {
    out.reason = "the target is neither certified nor attested pure-dimensional";
    return out;
  }
  if (dims.m != dims.n) {
    out.reason = "source and target dimensions differ";
    return out;
  }
  if (dims.m < 1) {
    out.reason = "the common dimension is zero";
    return out;
  }
  std::vector<const Stratum*> positive;
  for (const auto& s : report.strata.strata)
    if (s.j > 0)
      positive.push_back(&s);
  if (positive.size() != 1) {
    out.reason = std::to_string(positive.size()) + " strata have positive fibre dimension";
    return out;
  }
  const Stratum& special = *positive.front();
  if (special.image_dim != 0) {
    out.reason = "the positive-dimensional fibres lie over a set of dimension " +
                 std::to_string(special.image_dim);
    return out;
  }
  const auto point = single_point(special.image_ideal);
  if (!point) {
    out.reason = "the positive-dimensional fibres do not lie over a single rational point";
    return out;
  }
  out.query = MultiplicityQuery{dims.m, special.j, *point, route};
  out.bound = multiplicity_bound(dims.m, special.j);
  return out;
}

} // namespace

PhiReport analyze(const ProjectionSetup& setup, const AnalyzeOptions& options) {
  PhiReport report;
  const auto& dims = setup.dims();
  const auto& projection = setup.projection();
  const auto& attest = setup.attestations();
  report.dims = dims;
  report.source_empty = setup.source_empty();
  report.target_irreducible = projection.target_irreducible;
  if (report.source_empty) {
    report.upper_unavailable = "unavailable: empty source";
    report.lower_unavailable = "unavailable: empty source";
    report.multiplicity.reason = "empty source";
    report.warnings.push_back("the source ideal is the unit ideal: X is empty");
    return report;
  }

  report.source_purity = pure_dimension_check(setup.source_ideal(), options.split);
  report.target_purity = pure_dimension_check(setup.target_ideal(), options.split);
  if (!attest.target_locally_irreducible)
    report.warnings.push_back("target not attested locally irreducible");
  if (!attest.target_pure_dimensional)
    report.warnings.push_back("target not attested pure-dimensional");
  if (attest.target_pure_dimensional &&
      report.target_purity.status == PurityCheck::Status::mixed)
    report.warnings.push_back("target attested pure-dimensional but its pieces have dimensions of "
                              "different sizes");
  if (projection.target_irreducible == false)
    report.warnings.push_back("the target variety splits into several pieces");
  if (!setup.generators_define_source())
    report.warnings.push_back("the source generators do not cut out X inside the ambient target");

  report.strata = stratify_by_fibre_dimension(setup, options.stratify);
  report.lambda = report.strata.lambda();
  report.vertical = has_vertical_component(setup.source_ideal(), projection);
  const Verdict vertical = report.vertical.verdict;

  if (report.source_purity.pure())
    report.upper = phi_upper(report.strata, dims.m, dims.n);
  else
    report.upper_unavailable = report.source_purity.status == PurityCheck::Status::mixed
                                   ? "unavailable: non-pure source"
                                   : "unavailable: source purity unconfirmed";

  if (vertical == Verdict::yes) {
    report.lower = ExtendedNat(0);
    report.lower_basis = "vertical-component";
  } else if (vertical == Verdict::inconclusive) {
    report.lower_unavailable = "not applicable: vertical components undecided (" +
                               report.vertical.reason + ")";
  } else if (!attest.target_locally_irreducible) {
    report.lower_unavailable = "not applicable: target not attested locally irreducible";
  } else if (!setup.generators_define_source()) {
    report.lower_unavailable = "not applicable: the source generators do not cut out X";
  } else {
    report.lower = phi_lower(report.strata, dims.N, dims.k, dims.r);
    report.lower_basis = "formula";
  }

  if (vertical == Verdict::no && report.lambda) {
    if (*report.lambda < dims.k - dims.r)
      throw InternalInconsistency("minimal fibre dimension below k - r");
    if (report.source_purity.pure() && *report.lambda != dims.m - dims.n)
      throw InternalInconsistency("minimal fibre dimension differs from dim X - dim Y");
    if (report.upper && *report.upper < ExtendedNat(1))
      throw InternalInconsistency("no vertical component but the upper bound is 0");
  }
  if (vertical == Verdict::yes && report.upper && *report.upper != ExtendedNat(0))
    throw InternalInconsistency("vertical component but the upper bound is " +
                                report.upper->to_string());
  if (report.lower && report.upper && *report.lower > *report.upper)
    throw InternalInconsistency("lower bound " + report.lower->to_string() +
                                " exceeds upper bound " + report.upper->to_string());

  if (options.max_power > 0) {
    report.powers = phi_by_fibred_powers(setup, options.max_power);
    const auto& scan = *report.powers;
    if (report.upper && *report.upper < ExtendedNat(scan.at_least))
      throw InternalInconsistency("fibred powers give phi >= " + std::to_string(scan.at_least) +
                                  " above the upper bound");
    if (scan.exact) {
      if (report.upper && *scan.exact > *report.upper)
        throw InternalInconsistency("fibred powers exceed the upper bound");
      if (report.lower && *scan.exact < *report.lower)
        throw InternalInconsistency("fibred powers fall below the lower bound");
    }
  }

  std::map<ExactnessTag, ExtendedNat> fired;
  if (report.upper) {
    if (setup.target_ideal().is_zero())
      fired.emplace(ExactnessTag::smooth_target, *report.upper);
    if (report.lower && *report.lower == *report.upper)
      fired.emplace(ExactnessTag::bounds_meet, *report.upper);
    if (complete_intersection_premises(setup, report.source_purity))
      fired.emplace(ExactnessTag::complete_intersection, *report.upper);
    if (dims.n == 1 && attest.target_locally_irreducible)
      fired.emplace(ExactnessTag::curve_target, *report.upper);
  }
  if (report.powers && report.powers->exact)
    fired.emplace(ExactnessTag::fibred_power_determined, *report.powers->exact);
  for (const auto& [tag, value] : fired) {
    report.rules_fired.push_back(tag);
    if (!report.exact) {
      report.exact = value;
      report.tag = tag;
    } else if (*report.exact != value) {
      throw InternalInconsistency(std::string("exactness rules disagree: ") +
                                  to_string(*report.tag) + " gives " + report.exact->to_string() +
                                  ", " + to_string(tag) + " gives " + value.to_string());
    }
  }

  if (report.lower && report.upper && *report.lower < *report.upper)
    report.notes.push_back("the lower bound depends on the presentation: fewer source generators "
                           "or a smaller ambient target may raise it");
  if (options.multiplicity)
    report.multiplicity = certify_multiplicity(setup, report);
  return report;
}

} // namespace fibrephi
