#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <thread>

#include "fibrephi/error.hpp"
#include "support.hpp"

using namespace fibrephi;
using testing::I;
using testing::P;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps)
    out.push_back(p.to_string());
  return out;
}

/// Independent check of the Buchberger criterion and reducedness.
void check_reduced_basis(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const auto& lt = gb.elements[i].leading_term(gb.order);
    CHECK(lt.coefficient == 1);
    CHECK(lt.monomial == gb.leading[i]);
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j)
        continue;
      for (const auto& t : gb.elements[i].terms())
        CHECK_FALSE(gb.leading[j].divides(t.monomial));
      if (j > i)
        CHECK(normal_form(s_polynomial(gb.elements[i], gb.elements[j], gb.order), gb.elements, gb.order)
                  .is_zero());
    }
  }
}

bool power_in(const Polynomial& f, const Ideal& ideal, unsigned max_power) {
  Polynomial p = f;
  for (unsigned n = 1; n <= max_power; ++n, p = p * f)
    if (ideal_member(p, ideal))
      return true;
  return false;
}

} // namespace

TEST_CASE("S-polynomials") {
  auto r = testing::ring({}, {"x", "y"});
  const auto lex = MonomialOrder::lex();
  CHECK(s_polynomial(P(r, "x^2 - y"), P(r, "x"), lex) == P(r, "-y"));
  auto f = P(r, "x^2*y + 3*y - 1");
  CHECK(s_polynomial(f, f, lex).is_zero());
  CHECK(s_polynomial(P(r, "x"), P(r, "y"), lex).is_zero());
  CHECK_THROWS_AS(s_polynomial(Polynomial(r), f, lex), PreconditionError);
}

TEST_CASE("normal forms") {
  auto r = testing::ring({}, {"x", "y"});
  const auto lex = MonomialOrder::lex();
  auto f = P(r, "x^3 - 2*x*y");
  CHECK(normal_form(f, std::vector<Polynomial>{f}, lex).is_zero());
  const auto ideal = I(r, "x^2, y^2 - x");
  const auto& gb = ideal.standard_basis();
  CHECK(normal_form(P(r, "1"), gb.elements, gb.order) == P(r, "1"));
  // x^2*y - x*(x*y - 1) = x, and x is reduced against {x*y, y^2}
  std::vector<Polynomial> basis{P(r, "x*y - 1"), P(r, "y^2 - 1")};
  CHECK(normal_form(P(r, "x^2*y"), basis, lex) == P(r, "x"));
}

TEST_CASE("division certificate") {
  auto r = testing::ring({"y"}, {"x1", "x2"});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> basis{testing::random_poly(r, rng, 3, 2), testing::random_poly(r, rng, 3, 2)};
    if (basis[0].is_zero() || basis[1].is_zero())
      continue;
    auto f = testing::random_poly(r, rng, 5, 4);
    for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(1)}) {
      const auto d = divide(f, basis, order);
      Polynomial sum = d.remainder;
      for (std::size_t i = 0; i < basis.size(); ++i)
        sum = sum + d.quotients[i] * basis[i];
      CHECK(sum == f);
      for (const auto& t : d.remainder.terms())
        for (const auto& b : basis)
          CHECK_FALSE(b.leading_term(order).monomial.divides(t.monomial));
    }
  }
}

TEST_CASE("reduced bases") {
  auto r = testing::ring({}, {"x", "y"});
  const auto pair = I(r, "x^2 + y^2, x^2 - y^2");
  CHECK(strings(pair.groebner(MonomialOrder::lex()).elements) == std::vector<std::string>{"y^2", "x^2"});
  CHECK(I(r, "1").standard_basis().is_unit());
  CHECK(I(r, "x*y - 1, x").standard_basis().is_unit());
  CHECK(I(r, "3*x^2 - 6*y").standard_basis().elements == std::vector<Polynomial>{P(r, "x^2 - 2*y")});
  const auto cubic = I(r, "x^3 - 2*x*y, x^2*y - 2*y^2 + x");
  check_reduced_basis(cubic.standard_basis());
  check_reduced_basis(cubic.groebner(MonomialOrder::lex()));
}

TEST_CASE("basis is canonical under generator permutation") {
  auto r = testing::ring({"y1", "y2"}, {"x"});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g)
      gens.push_back(testing::random_poly(r, rng, 3, 2));
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled)
      g = g.scaled(Rational(static_cast<long>(rng() % 5) + 1));
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::elimination(2)}) {
      const Ideal ia(r, gens), ib(r, shuffled);
      const auto& a = ia.groebner(order);
      const auto& b = ib.groebner(order);
      CHECK(a.elements == b.elements);
      check_reduced_basis(a);
    }
  }
}

TEST_CASE("concurrent basis computations agree") {
  auto r = testing::ring({"y1", "y2", "y3", "y4"}, {"x"});
  const Ideal ideal = I(r, "y1*y4 - y2*y3, y1*x^2 + y4*x + y2 - y3");
  std::vector<std::vector<Polynomial>> seen(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t)
    threads.emplace_back([&, t] { seen[t] = ideal.groebner(MonomialOrder::elimination(4)).elements; });
  for (auto& t : threads)
    t.join();
  for (const auto& s : seen)
    CHECK(s == seen.front());
}

TEST_CASE("ideal membership") {
  auto r = testing::ring({"y1", "y2", "y3", "y4"}, {"x"});
  CHECK(ideal_member(P(r, "y1*y4 - y2*y3"), I(r, "y1*y4 - y2*y3")));
  CHECK_FALSE(ideal_member(P(r, "x"), I(r, "x^2")));
  // x*(x - 1) = (x^2 - x)
  CHECK(ideal_member(P(r, "x*(x - 1)"), I(r, "x*y1, x^2 - x")));
}

TEST_CASE("membership soundness on random combinations") {
  auto r = testing::ring({"y1", "y2"}, {"x"});
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens{testing::random_poly(r, rng, 3, 2), testing::random_poly(r, rng, 3, 2)};
    const Ideal ideal(r, gens);
    Polynomial g(r);
    for (const auto& gen : gens)
      g = g + testing::random_poly(r, rng, 3, 2) * gen;
    CHECK(ideal_member(g, ideal));
  }
}

TEST_CASE("radical membership") {
  auto r = testing::ring({"y1"}, {"x", "y"});
  CHECK(radical_member(P(r, "x"), I(r, "x^2")));
  CHECK_FALSE(radical_member(P(r, "x"), I(r, "y")));
  // (y1, x) = (0, 1) lies on V(x*y1, x^2 - x) and x does not vanish there
  auto J = I(r, "x*y1, x^2 - x");
  Assignment witness{{0, 0}, {1, 1}, {2, 0}};
  for (const auto& g : J.generators())
    CHECK(g.evaluate(witness) == 0);
  CHECK(P(r, "x").evaluate(witness) != 0);
  CHECK_FALSE(radical_member(P(r, "x"), J));
}

TEST_CASE("radical membership agrees with power search") {
  auto r = testing::ring({}, {"x", "y"});
  const std::vector<std::string> bases = {"x", "y", "x + y", "x - y", "x*y", "x^2 - y"};
  const std::vector<std::string> probes = {"x", "y", "x + y", "x*y", "x - 2*y", "x^2", "x + 1"};
  std::mt19937_64 rng(29);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g)
      gens.push_back(P(r, bases[rng() % bases.size()]).pow(static_cast<unsigned>(rng() % 3) + 1));
    const Ideal ideal(r, gens);
    for (const auto& probe : probes) {
      const auto f = P(r, probe);
      CAPTURE(ideal.to_string());
      CAPTURE(probe);
      // generators have degree at most 6
      const bool by_power = power_in(f, ideal, 12);
      CHECK(radical_member(f, ideal) == by_power);
      positives += by_power;
    }
  }
  CHECK(positives > 20);
}

TEST_CASE("elimination") {
  auto r = testing::ring({"y"}, {"x"});
  CHECK(elimination_ideal(I(r, "y - x^2"), 1).is_zero());
  const auto all = I(r, "y - x^2, x*y");
  CHECK(elimination_ideal(all, 2).generators() == all.generators());

  auto c = testing::ring({"y1", "y2", "y3", "y4"}, {"x"});
  const auto J = I(c, "y1*y4 - y2*y3, y1*x^2 + y4*x + y2 - y3");
  const auto image = elimination_ideal(J, 4);
  CHECK(image.standard_basis().elements == I(c, "y1*y4 - y2*y3").standard_basis().elements);
  for (const auto& g : image.generators()) {
    CHECK(g.involves_only(0, 4));
    CHECK(ideal_member(g, J));
  }
}

TEST_CASE("saturation") {
  auto r = testing::ring({"y"}, {"x"});
  reset_saturation_stats();
  auto s = saturation(I(r, "x*y"), P(r, "y"));
  CHECK(s.ideal.standard_basis().elements == I(r, "x").standard_basis().elements);
  CHECK(s.exponent == 1);
  const auto J = I(r, "x^2*y, x*y^3 - x");
  CHECK(saturation(J, P(r, "1")).ideal.generators() == J.generators());
  CHECK(is_unit_ideal(saturation(I(r, "x^2"), P(r, "x")).ideal));
  CHECK(saturation(I(r, "x^2"), P(r, "x")).exponent == 2);
  CHECK_THROWS_AS(saturation(J, Polynomial(r)), PreconditionError);
  const auto stats = saturation_stats();
  CHECK(stats.calls == stats.certified);
}

TEST_CASE("saturation contract on random ideals") {
  auto r = testing::ring({"y1", "y2"}, {"x"});
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Ideal ideal(r, {testing::random_poly(r, rng, 2, 2) * P(r, "y1"), testing::random_poly(r, rng, 3, 2)});
    const auto h = P(r, trial % 2 ? "y1" : "y1 - x");
    const auto sat = saturation(ideal, h);
    for (const auto& g : ideal.generators())
      CHECK(ideal_member(g, sat.ideal));
    for (const auto& g : sat.ideal.generators())
      CHECK(ideal_member(h.pow(sat.exponent) * g, ideal));
    const auto twice = saturation(sat.ideal, h);
    CHECK(twice.ideal.standard_basis().elements == sat.ideal.standard_basis().elements);
  }
}

TEST_CASE("intersection") {
  auto r = testing::ring({}, {"x", "y"});
  CHECK(intersection(I(r, "x"), I(r, "y")).standard_basis().elements == I(r, "x*y").standard_basis().elements);
  CHECK(intersection(I(r, "x^2, y"), I(r, "x")).standard_basis().elements ==
        I(r, "x^2, x*y").standard_basis().elements);
}

TEST_CASE("Krull dimension") {
  auto c = testing::ring({"y1", "y2", "y3", "y4"}, {});
  CHECK(krull_dimension(I(c, "y1*y4 - y2*y3")) == 3);
  auto r = testing::ring({"y1", "y2", "y3", "y4"}, {"x"});
  CHECK(krull_dimension(Ideal(r)) == 5);
  CHECK(krull_dimension(I(r, "y1*y4 - y2*y3, y1*x^2 + y4*x + y2 - y3")) == 3);
  auto p = testing::ring({}, {"x", "y"});
  CHECK(krull_dimension(I(p, "x, y")) == 0);
  CHECK(krull_dimension(I(p, "x, x - 1")) == -1);
  CHECK(krull_dimension(I(p, "x*y")) == 1);
}

TEST_CASE("dimension is monotone along nested ideals") {
  auto r = testing::ring({"y1", "y2", "y3", "y4"}, {"x"});
  const std::vector<std::string> chain = {"y1*y4 - y2*y3", "y1*x^2 + y4*x + y2 - y3", "y1", "y4",
                                          "y2 - y3", "x"};
  Ideal ideal(r);
  int previous = krull_dimension(ideal);
  for (const auto& g : chain) {
    ideal = ideal.with(P(r, g));
    const int d = krull_dimension(ideal);
    CHECK(d <= previous);
    previous = d;
  }
  CHECK(previous == 0);
}

TEST_CASE("unit ideals") {
  auto r = testing::ring({"y"}, {"x"});
  CHECK(is_unit_ideal(I(r, "x, x - 1")));
  CHECK_FALSE(is_unit_ideal(Ideal(r)));
  // fibre of y*x - 1 over y = 0
  const auto fibre = P(r, "y*x - 1").specialize({{0, 0}});
  CHECK(fibre == P(r, "-1"));
  CHECK(is_unit_ideal(Ideal(r, {fibre})));
}

TEST_CASE("combinatorial dimension") {
  std::vector<Monomial> leads{Monomial{1, 1, 0}, Monomial{1, 0, 1}};
  CHECK(combinatorial_dimension(leads, 0b111) == 2);
  CHECK(maximal_independent_set(leads, 0b111) == 0b110);
  CHECK(combinatorial_dimension(leads, 0b011) == 1);
  std::vector<Monomial> unit{Monomial{0, 0, 0}};
  CHECK(combinatorial_dimension(unit, 0b111) == -1);
}
