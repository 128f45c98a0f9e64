#pragma once

// Shared random generators for tests.

#include <random>

#include "qplane/qpoly.hpp"

namespace qplane::testing {

inline Rational random_rational(std::mt19937_64& rng, int max_abs = 6, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937_64& rng, int max_power = 4, bool complex_ok = true) {
  std::uniform_int_distribution<int> nterms(1, 2);
  std::uniform_int_distribution<int> power(-max_power, max_power);
  std::bernoulli_distribution want_im(complex_ok ? 0.3 : 0.0);
  Scalar out;
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    GaussQ g(random_rational(rng));
    if (want_im(rng)) g.im = random_rational(rng);
    out += Scalar::with_term(power(rng), g);
  }
  return out;
}

inline QPolynomial random_poly(std::mt19937_64& rng, int max_degree = 4, int max_terms = 5,
                               int max_power = 4, bool complex_ok = true) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  QPolynomial out;
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    const int d = deg(rng);
    std::uniform_int_distribution<int> mm(0, d);
    const int m = mm(rng);
    out += QPolynomial::monomial(m, d - m, random_scalar(rng, max_power, complex_ok));
  }
  return out;
}

inline QPolynomial random_hermitian_poly(std::mt19937_64& rng, int max_degree = 4,
                                         int max_terms = 5) {
  QPolynomial f = random_poly(rng, max_degree, max_terms);
  return f + involution(f);
}

}  // namespace qplane::testing
