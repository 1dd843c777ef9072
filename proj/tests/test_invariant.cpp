#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fibrephi/error.hpp"
#include "fibrephi/invariant.hpp"
#include "support.hpp"

using namespace fibrephi;
using testing::I;
using testing::P;

namespace {

ProjectionSetup make_setup(const std::vector<std::string>& y, const std::vector<std::string>& x,
                           const std::string& target, const std::string& source) {
  auto r = testing::ring(y, x);
  return ProjectionSetup::build(r, parse_polynomial_list(target, r, true), true, {},
                                parse_polynomial_list(source, r, true), {true, true});
}

ProjectionSetup cone() {
  return make_setup({"y1", "y2", "y3", "y4"}, {"x"}, "y1*y4 - y2*y3", "y1*x^2 + y4*x + y2 - y3");
}

Stratification synthetic(const std::vector<std::pair<int, int>>& strata) {
  Stratification s;
  for (const auto& [j, dim] : strata) {
    Stratum st;
    st.j = j;
    st.image_dim = dim;
    s.strata.push_back(st);
  }
  return s;
}

/// Straight evaluation of the two bound formulas with floating floors.
std::optional<long> naive_bound(const std::vector<std::pair<int, int>>& strata, int top, int shift,
                                std::optional<int> skip) {
  std::optional<long> best;
  for (const auto& [j, dim] : strata) {
    if (j <= shift || (skip && j == *skip))
      continue;
    const long v = static_cast<long>(std::floor(double(top - dim - 1) / double(j - shift)));
    best = best ? std::min(*best, v) : v;
  }
  return best;
}

} // namespace

TEST_CASE("extended naturals") {
  const ExtendedNat two(2), inf = ExtendedNat::infinity();
  CHECK(two < inf);
  CHECK(ExtendedNat(0) < two);
  CHECK(inf == ExtendedNat::infinity());
  CHECK(inf.to_string() == "infinity");
  CHECK(two.to_string() == "2");
  CHECK(two.value() == 2);
  CHECK_THROWS(inf.value());
}

TEST_CASE("bound formulas on examples") {
  // the quadratic over the cone: m = n = N = 3, k = r = 1
  const auto cone_strata = synthetic({{0, 3}, {1, 0}});
  CHECK(phi_upper(cone_strata, 3, 3) == ExtendedNat(2));
  CHECK(phi_lower(cone_strata, 3, 1, 1) == ExtendedNat(2));
  // pencil with n = 2, l = 2: m = 3, N = 2, k = 3, r = 2
  const auto pencil = synthetic({{1, 2}, {2, 0}});
  CHECK(phi_upper(pencil, 3, 2) == ExtendedNat(1));
  CHECK(phi_lower(pencil, 2, 3, 2) == ExtendedNat(1));
  // a single stratum gives no constraint
  CHECK(phi_upper(synthetic({{0, 1}}), 1, 1).is_infinite());
  CHECK(phi_lower(synthetic({{0, 1}}), 1, 1, 1).is_infinite());
  // the x-line over a point of the line
  CHECK(phi_upper(synthetic({{0, 1}, {1, 0}}), 1, 1) == ExtendedNat(0));
}

TEST_CASE("bound formulas agree with direct evaluation") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 4) + 1;
    const int N = n + static_cast<int>(rng() % 3);
    const int m_minus_n = static_cast<int>(rng() % 3);
    const int m = n + m_minus_n;
    // generic stratum first, then jumps over smaller images
    std::vector<std::pair<int, int>> strata{{m_minus_n, n}};
    int j = m_minus_n;
    for (int dim = n - 1; dim >= 0; --dim) {
      if (rng() % 2 == 0)
        continue;
      j += 1 + static_cast<int>(rng() % 2);
      strata.emplace_back(j, dim);
    }
    const auto s = synthetic(strata);
    const auto upper = naive_bound(strata, n, m - n, std::nullopt);
    CHECK(phi_upper(s, m, n) == (upper ? ExtendedNat(*upper) : ExtendedNat::infinity()));
    // r equations in k variables with k - r = m - N, so lambda = m - n >= k - r
    const int k = m_minus_n + 2, r = k - (m - N);
    if (r < 0)
      continue;
    const auto lower = naive_bound(strata, N, k - r, m_minus_n);
    CHECK(phi_lower(s, N, k, r) == (lower ? ExtendedNat(*lower) : ExtendedNat::infinity()));
  }
}

TEST_CASE("multiplicity bound") {
  CHECK(multiplicity_bound(3, 1) == 2);
  CHECK(multiplicity_bound(2, 1) == 1);
  CHECK(multiplicity_bound(5, 2) == 2);
  CHECK(multiplicity_bound(1, 3) == 0);
  CHECK_THROWS_AS(multiplicity_bound(3, 0), PreconditionError);
}

TEST_CASE("tag names") {
  CHECK(std::string(to_string(ExactnessTag::smooth_target)) == "smooth-target");
  CHECK(std::string(to_string(ExactnessTag::bounds_meet)) == "bounds-meet");
  CHECK(std::string(to_string(ExactnessTag::complete_intersection)) == "complete-intersection");
  CHECK(std::string(to_string(ExactnessTag::curve_target)) == "curve-target");
  CHECK(std::string(to_string(ExactnessTag::fibred_power_determined)) == "fibred-power-determined");
}

TEST_CASE("single rational points") {
  auto t = testing::ring({"y1", "y2"}, {});
  const auto p = single_point(I(t, "y1 - 1, y2 + 2"));
  REQUIRE(p);
  CHECK(*p == std::vector<Rational>{1, -2});
  CHECK(single_point(I(t, "y1^2, y2")) == std::vector<Rational>{0, 0});
  CHECK(single_point(I(t, "y1^2 - 2*y1 + 1, 3*y2 - 1")) == std::vector<Rational>{1, Rational(1, 3)});
  CHECK_FALSE(single_point(I(t, "y1^2 - 1, y2")));
  CHECK_FALSE(single_point(I(t, "y1^2 + 1, y2")));
  CHECK_FALSE(single_point(I(t, "y1")));
  CHECK_FALSE(single_point(I(t, "1")));
}

TEST_CASE("analysis of the quadratic over the cone") {
  AnalyzeOptions options;
  options.max_power = 3;
  const auto report = analyze(cone(), options);
  CHECK(report.source_purity.pure());
  CHECK(report.source_purity.dimension == 3);
  CHECK(report.vertical.verdict == Verdict::no);
  CHECK(report.lambda == 0);
  CHECK(report.upper == ExtendedNat(2));
  CHECK(report.lower == ExtendedNat(2));
  CHECK(report.lower_basis == "formula");
  CHECK(report.exact == ExtendedNat(2));
  CHECK(report.tag == ExactnessTag::bounds_meet);
  REQUIRE(report.powers);
  REQUIRE(report.powers->checks.size() == 3);
  CHECK(report.powers->checks[0].verdict == Verdict::no);
  CHECK(report.powers->checks[1].verdict == Verdict::no);
  CHECK(report.powers->checks[2].verdict == Verdict::yes);
  CHECK(report.powers->exact == ExtendedNat(2));
  CHECK(report.powers->at_least == 2);
  CHECK(std::find(report.rules_fired.begin(), report.rules_fired.end(),
                  ExactnessTag::fibred_power_determined) != report.rules_fired.end());
  REQUIRE(report.multiplicity.bound);
  CHECK(*report.multiplicity.bound == 2);
  REQUIRE(report.multiplicity.query);
  CHECK(report.multiplicity.query->d == 3);
  CHECK(report.multiplicity.query->q == 1);
  CHECK(report.multiplicity.query->special_point == std::vector<Rational>{0, 0, 0, 0});
}

TEST_CASE("analysis of small examples") {
  SUBCASE("blow-up chart") {
    const auto r = analyze(make_setup({"y1", "y2"}, {"x"}, "0", "y1*x - y2"));
    CHECK(r.vertical.verdict == Verdict::no);
    CHECK(r.exact == ExtendedNat(1));
    CHECK(r.tag == ExactnessTag::smooth_target);
    REQUIRE(r.multiplicity.bound);
    CHECK(*r.multiplicity.bound == 1);
  }
  SUBCASE("graph") {
    const auto r = analyze(make_setup({"y"}, {"x"}, "0", "x - y"));
    CHECK(r.upper->is_infinite());
    CHECK(r.exact->is_infinite());
  }
  SUBCASE("vertical line") {
    const auto r = analyze(make_setup({"y"}, {"x"}, "0", "y*x"));
    CHECK(r.vertical.verdict == Verdict::yes);
    CHECK(r.upper == ExtendedNat(0));
    CHECK(r.lower == ExtendedNat(0));
    CHECK(r.lower_basis == "vertical-component");
    CHECK(r.exact == ExtendedNat(0));
  }
  SUBCASE("mixed dimension") {
    const auto r = analyze(make_setup({"y"}, {"x1", "x2"}, "0", "x1*y, x1*x2"));
    CHECK(r.source_purity.status == PurityCheck::Status::mixed);
    CHECK_FALSE(r.upper);
    CHECK_FALSE(r.upper_unavailable.empty());
    CHECK(r.lower == ExtendedNat(0));
    CHECK_FALSE(r.exact);
  }
  SUBCASE("cusp") {
    const auto r = analyze(make_setup({"y1", "y2"}, {"x"}, "y2^2 - y1^3", "y1*x - y2"));
    CHECK(r.vertical.verdict == Verdict::yes);
    CHECK(r.exact == ExtendedNat(0));
    CHECK(r.tag == ExactnessTag::bounds_meet);
  }
}

TEST_CASE("bounds sandwich on random setups") {
  auto r = testing::ring({"y1", "y2"}, {"x1", "x2"});
  std::mt19937_64 rng(59);
  int analysed = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> source;
    const int count = static_cast<int>(rng() % 2) + 1;
    for (int g = 0; g < count; ++g) {
      auto p = testing::random_poly(r, rng, 3, 2);
      if (!p.is_zero())
        source.push_back(p);
    }
    if (source.empty())
      continue;
    const auto setup = ProjectionSetup::build(r, {}, true, {}, source, {true, true});
    if (setup.source_empty())
      continue;
    CAPTURE(setup.source_ideal().to_string());
    PhiReport report;
    REQUIRE_NOTHROW(report = analyze(setup));
    ++analysed;
    const auto& d = report.dims;
    REQUIRE(report.lambda);
    CHECK(*report.lambda >= d.k - d.r);
    if (report.source_purity.pure() && report.vertical.verdict == Verdict::no) {
      CHECK(*report.lambda == d.m - d.n);
      REQUIRE(report.upper);
      if (report.lower)
        CHECK(*report.lower <= *report.upper);
    }
    OracleOptions oracle;
    oracle.seed = static_cast<std::uint64_t>(trial);
    oracle.points_per_cell = 5;
    CHECK(check_stratification(setup.source_ideal(), setup.projection(), report.strata, oracle).mismatches == 0);
  }
  CHECK(analysed > 20);
}
