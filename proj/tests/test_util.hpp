#pragma once

#include "ffcheck/suites.hpp"

namespace testutil {

using namespace ffcheck;

inline Polynomial P(std::string_view s) { return parse_polynomial(s); }
inline RationalFunction R(std::string_view s) { return parse_rational_function(s); }
inline BivariatePolynomial B(std::string_view s) { return parse_bivariate(s); }
inline PlaceSet S(std::string_view s) { return PlaceSet::parse(s); }
inline BigRational Q(long n, long d = 1) { return make_rational(n, d); }

/// Random polynomial of degree <= max_degree with small integer coefficients.
inline Polynomial random_poly(Rng& rng, std::size_t max_degree, long bound = 5) {
  std::vector<BigRational> c(max_degree + 1);
  for (auto& x : c) x = BigRational(rng.range(-bound, bound));
  return Polynomial(std::move(c));
}

inline Polynomial random_nonzero_poly(Rng& rng, std::size_t max_degree, long bound = 5) {
  for (;;) {
    Polynomial p = random_poly(rng, max_degree, bound);
    if (!p.is_zero()) return p;
  }
}

}  // namespace testutil
