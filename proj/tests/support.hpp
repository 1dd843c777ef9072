#pragma once

#include <random>
#include <string>
#include <vector>

#include "fibrephi/groebner.hpp"

namespace testing {

inline fibrephi::RingPtr ring(std::vector<std::string> y, std::vector<std::string> x) {
  return fibrephi::PolynomialRing::make(std::move(y), std::move(x));
}

inline fibrephi::Polynomial P(const fibrephi::RingPtr& r, const std::string& text) {
  return fibrephi::parse_polynomial(text, r);
}

inline fibrephi::Ideal I(const fibrephi::RingPtr& r, const std::string& text) {
  return fibrephi::Ideal(r, fibrephi::parse_polynomial_list(text, r, true));
}

/// Random polynomial with small integer coefficients and bounded degree.
inline fibrephi::Polynomial random_poly(const fibrephi::RingPtr& r, std::mt19937_64& rng,
                                        unsigned terms = 4, unsigned degree = 3) {
  std::vector<fibrephi::Term> out;
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<fibrephi::Monomial::Exponent> e(r->arity());
    unsigned budget = static_cast<unsigned>(rng() % (degree + 1));
    while (budget-- > 0)
      ++e[rng() % r->arity()];
    out.push_back({fibrephi::Monomial(std::move(e)), fibrephi::Rational(static_cast<long>(rng() % 11) - 5)});
  }
  return fibrephi::Polynomial(r, std::move(out));
}

inline fibrephi::Assignment random_point(const fibrephi::RingPtr& r, std::mt19937_64& rng) {
  fibrephi::Assignment a;
  for (std::size_t i = 0; i < r->arity(); ++i) {
    fibrephi::Rational v(mpz_class(static_cast<long>(rng() % 21) - 10),
                         mpz_class(static_cast<long>(rng() % 3) + 1));
    v.canonicalize();
    a[i] = v;
  }
  return a;
}

} // namespace testing
