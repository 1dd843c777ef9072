// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fibrephi/cli/commands.hpp"

using namespace fibrephi;
using namespace fibrephi::cli;

namespace {

const std::string corpus_dir = FIBREPHI_CORPUS_DIR;

SetupFile fixture(const std::string& name) { return load_setup(corpus_dir + "/" + name + ".setup"); }

std::vector<std::pair<int, int>> labels(const Stratification& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& st : s.strata)
    out.emplace_back(st.j, st.image_dim);
  return out;
}

/// Collects failed conditions of one criterion.
class Checks {
public:
  void expect(bool ok, const std::string& what) {
    if (!ok)
      failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

private:
  std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

bool run(int number, const std::string& title, const std::function<void(Checks&)>& body) {
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(start);
  const bool ok = checks.failures().empty();
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << title << " (" << fmt_seconds(elapsed) << ")\n";
  for (const auto& f : checks.failures())
    std::cout << "         " << f << "\n";
  return ok;
}

void timed(Checks& c, double limit, const std::string& what, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const double s = seconds_since(start);
  c.expect(s < limit, what + " took " + fmt_seconds(s) + ", limit " + fmt_seconds(limit));
}

void cone_end_to_end(Checks& c) {
  timed(c, 10, "analysis", [&] {
    const auto f = fixture("determinantal_cone");
    const auto r = analyze(f.setup);
    c.expect(r.upper == ExtendedNat(2), "phi_s is not 2");
    c.expect(r.lower == ExtendedNat(2), "lower bound is not 2");
    c.expect(r.exact == ExtendedNat(2), "phi_exact is not 2");
    c.expect(r.tag == ExactnessTag::bounds_meet, "tag is not bounds-meet");
    c.expect(labels(r.strata) == std::vector<std::pair<int, int>>{{0, 3}, {1, 0}},
             "strata are not {(0, 3), (1, 0)}");
  });
}

void pencil_family(Checks& c) {
  const std::vector<std::pair<int, int>> family = {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
  for (const auto& [n, l] : family) {
    const std::string name = "quadric_pencil_n" + std::to_string(n) + "_l" + std::to_string(l);
    timed(c, 60, name, [&] {
      const auto f = fixture(name);
      const auto purity = pure_dimension_check(f.setup.source_ideal());
      c.expect(purity.pure() && purity.dimension == 2 * n - 1, name + ": X is not pure of dimension 2n-1");
      const auto r = analyze(f.setup);
      const auto* top = r.strata.find(n);
      c.expect(top && top->image_dim == n - l, name + ": no stratum (j=n, image dim n-l)");
      c.expect(r.exact == ExtendedNat(l - 1), name + ": phi_exact is not l-1");
      c.expect(r.tag == ExactnessTag::smooth_target, name + ": tag is not smooth-target");
      c.expect(r.lower == ExtendedNat(l - 1), name + ": lower bound is not l-1");
    });
  }
}

void cone_powers(Checks& c) {
  timed(c, 300, "fibred powers", [&] {
    const auto f = fixture("determinantal_cone");
    const auto scan = phi_by_fibred_powers(f.setup, 3);
    std::vector<Verdict> verdicts;
    for (const auto& check : scan.checks)
      verdicts.push_back(check.verdict);
    c.expect(verdicts == std::vector<Verdict>{Verdict::no, Verdict::no, Verdict::yes},
             "verdicts are not (false, false, true)");
    c.expect(scan.exact == ExtendedNat(2), "fibred powers do not determine phi = 2");
  });
}

void degenerate(Checks& c) {
  timed(c, 5, "vertical_line", [&] {
    const auto r = analyze(fixture("vertical_line").setup);
    c.expect(r.exact == ExtendedNat(0), "V(y*x): phi_exact is not 0");
    c.expect(r.vertical.verdict == Verdict::yes && r.vertical.witness.has_value(), "V(y*x): no vertical witness");
  });
  timed(c, 5, "graph", [&] {
    const auto r = analyze(fixture("graph").setup);
    c.expect(r.upper && r.upper->is_infinite(), "V(x-y): phi_s is not infinity");
  });
  timed(c, 5, "hyperbola", [&] {
    const auto r = analyze(fixture("hyperbola").setup);
    c.expect(labels(r.strata) == std::vector<std::pair<int, int>>{{0, 1}}, "V(y*x-1): not a single j=0 stratum");
  });
}

void oracle(Checks& c) {
  const auto rows = check_corpus(corpus_dir, 0);
  c.expect(!rows.empty(), "empty corpus");
  std::size_t points = 0, mismatches = 0;
  for (const auto& row : rows) {
    const auto f = load_setup(row.path);
    if (f.setup.source_empty())
      continue;
    const auto strat = stratify_by_fibre_dimension(f.setup);
    OracleOptions options;
    options.seed = 1;
    options.attempts_per_cell = 200;
    const auto report = check_stratification(f.setup.source_ideal(), f.setup.projection(), strat, options);
    points += report.points;
    mismatches += report.mismatches;
    c.expect(report.mismatches == 0, row.path + ": " + std::to_string(report.mismatches) + " mismatches");
  }
  c.expect(points > 0, "no sample points found");
  std::cout << "         " << points << " sampled fibres, " << mismatches << " mismatches\n";
}

void invariants(Checks& c) {
  reset_saturation_stats();
  for (const auto& row : check_corpus(corpus_dir, 0)) {
    c.expect(row.passed, row.path + " fails its expectations");
    const auto f = load_setup(row.path);
    AnalyzeOptions options;
    options.max_power = f.expect.max_power.value_or(0);
    const auto r = analyze(f.setup, options);
    const auto& d = r.dims;
    if (r.upper && r.lower)
      c.expect(*r.lower <= *r.upper, row.path + ": lower bound above phi_s");
    if (r.lambda) {
      c.expect(*r.lambda >= d.k - d.r, row.path + ": lambda < k - r");
      if (r.vertical.verdict == Verdict::no)
        c.expect(*r.lambda == d.m - d.n, row.path + ": lambda != m - n without vertical components");
    }
  }
  const auto stats = saturation_stats();
  c.expect(stats.calls > 0, "no saturation calls");
  c.expect(stats.calls == stats.certified, "uncertified saturations: " +
                                               std::to_string(stats.calls - stats.certified));

  auto ring = PolynomialRing::make({"y1", "y2"}, {"x"});
  std::mt19937_64 rng(2024);
  auto random_poly = [&] {
    std::vector<Term> terms;
    for (int t = 0; t < 3; ++t) {
      std::vector<Monomial::Exponent> e(ring->arity());
      for (unsigned budget = static_cast<unsigned>(rng() % 3); budget > 0; --budget)
        ++e[rng() % ring->arity()];
      terms.push_back({Monomial(std::move(e)), Rational(static_cast<long>(rng() % 9) - 4)});
    }
    return Polynomial(ring, std::move(terms));
  };
  int canonical = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> gens{random_poly(), random_poly(), random_poly()};
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Ideal a(ring, gens), b(ring, shuffled);
    canonical += a.standard_basis().elements == b.standard_basis().elements;
  }
  c.expect(canonical == 50, std::to_string(50 - canonical) + " of 50 bases depend on generator order");
}

void multiplicity(Checks& c) {
  const auto cone = analyze(fixture("determinantal_cone").setup);
  c.expect(cone.multiplicity.bound == std::int64_t{2}, "cone: multiplicity bound is not 2");
  const auto chart = analyze(fixture("blowup_chart").setup);
  c.expect(chart.multiplicity.bound == std::int64_t{1}, "blow-up chart: multiplicity bound is not 1");
}

} // namespace

int main() {
  bool ok = true;
  ok &= run(1, "quadratic over the cone: phi_s = lower = exact = 2, strata {(0,3),(1,0)}, < 10 s", cone_end_to_end);
  ok &= run(2, "quadric pencils: pure of dim 2n-1, stratum (n, n-l), phi = l-1 by smooth target, < 60 s each",
            pencil_family);
  ok &= run(3, "fibred powers of the cone: (1,false) (2,false) (3,true), phi = 2, < 5 min", cone_powers);
  ok &= run(4, "degenerate fixtures: V(y*x), V(x-y), V(y*x-1), < 5 s each", degenerate);
  ok &= run(5, "sampled fibres agree with every cell label over the corpus", oracle);
  ok &= run(6, "sandwich, lambda bounds, basis canonicity, certified saturations", invariants);
  ok &= run(7, "multiplicity bound: 2 on the cone, 1 on the blow-up chart", multiplicity);
  return ok ? 0 : 1;
}
