#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qplane/qpoly.hpp"
#include "qplane/symbol.hpp"
#include "support/free_oracle.hpp"
#include "support/gen.hpp"

using namespace qplane;
using namespace qplane::testing;

namespace {
const QPolynomial X = QPolynomial::gen_x();
const QPolynomial Xs = QPolynomial::gen_xstar();
}  // namespace

TEST_CASE("scalar arithmetic and evaluation") {
  Scalar a = Scalar::q_power(1);  // s^2
  CHECK(std::abs(a.eval(2.0).real() - 2.0) < 1e-15);
  CHECK(std::abs(Scalar::s_power(-1).eval(4.0).real() - 0.5) < 1e-15);

  Scalar b = Scalar::from_int(1) + Scalar::imaginary_unit() * Scalar::s_power(1);
  auto v = b.eval(0.25);
  CHECK(v.real() == doctest::Approx(1.0));
  CHECK(v.imag() == doctest::Approx(0.5));

  // s^a * s^b = s^{a+b}
  CHECK(Scalar::s_power(3) * Scalar::s_power(-5) == Scalar::s_power(-2));
  // commutative, associative spot check
  Scalar c = Scalar::with_term(1, GaussQ(make_rational(2, 3), make_rational(1, 2)));
  CHECK(b * c == c * b);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("scalar reduction modulo s^2 - q") {
  Rational q = make_rational(2);
  QuadVal v = Scalar::s_power(-1).reduce(q);  // s^{-1} = s/q
  CHECK(v.c0.re == 0);
  CHECK(v.c1.re == make_rational(1, 2));
  QuadVal w = Scalar::s_power(4).reduce(q);
  CHECK(w.c0.re == make_rational(4));
  CHECK(w.c1.is_zero());
  QuadVal u = Scalar::s_power(-3).reduce(q);  // s^{-3} = q^{-2} s
  CHECK(u.c1.re == make_rational(1, 4));
}

TEST_CASE("normal_mul basics") {
  // x x* = q x* x
  QPolynomial p = normal_mul(X, Xs);
  CHECK(p == QPolynomial::monomial(1, 1, Scalar::q_power(1)));

  // identity element
  QPolynomial m23 = QPolynomial::monomial(2, 3);
  CHECK(normal_mul(m23, QPolynomial::one()) == m23);
  CHECK(normal_mul(QPolynomial::one(), m23) == m23);

  // x^2 x* = q^2 x* x^2 (free rewriting oracle agrees)
  Word w = {Letter::X, Letter::X, Letter::XStar};
  CHECK(word_as_product(w) == reduce_word(w));
  CHECK(word_as_product(w) == QPolynomial::monomial(1, 2, Scalar::q_power(2)));
}

TEST_CASE("normal form rewrite oracle on random words") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 8);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    const int L = len(rng);
    for (int j = 0; j < L; ++j) w.push_back(coin(rng) ? Letter::X : Letter::XStar);
    CHECK(word_as_product(w) == reduce_word(w));
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    QPolynomial f = random_poly(rng, 4, 3);
    QPolynomial g = random_poly(rng, 4, 3);
    QPolynomial h = random_poly(rng, 4, 3);
    CHECK(normal_mul(normal_mul(f, g), h) == normal_mul(f, normal_mul(g, h)));
  }
}

TEST_CASE("involution") {
  CHECK(involution(QPolynomial::monomial(2, 3)) == QPolynomial::monomial(3, 2));
  // (i x)* = -i x*
  QPolynomial ix = QPolynomial::monomial(0, 1, Scalar::imaginary_unit());
  CHECK(involution(ix) == QPolynomial::monomial(1, 0, -Scalar::imaginary_unit()));
  // x x* is Hermitian
  QPolynomial p = normal_mul(X, Xs);
  CHECK(involution(p) == p);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    QPolynomial f = random_poly(rng);
    QPolynomial g = random_poly(rng);
    CHECK(involution(involution(f)) == f);
    // anti-homomorphism
    CHECK(involution(normal_mul(f, g)) == normal_mul(involution(g), involution(f)));
  }
}

TEST_CASE("cexp projects onto diagonal terms") {
  CHECK(cexp(X + Xs) == QPolynomial::zero());
  QPolynomial xxs = normal_mul(X, Xs);
  CHECK(cexp(xxs) == xxs);

  // (x+x*)^2 = x^2 + (q+1) x*x + x*^2, diagonal part (q+1) x*x
  QPolynomial sq = (X + Xs).pow(2);
  QPolynomial expect = QPolynomial::monomial(1, 1, Scalar::q_power(1) + Scalar::from_int(1));
  CHECK(cexp(sq) == expect);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    QPolynomial f = random_poly(rng);
    CHECK(cexp(cexp(f)) == cexp(f));
    CHECK(cexp(f).is_diagonal());
    // module property over diagonal g1, g2
    QPolynomial g1 = poly_in_xstarx({random_scalar(rng), random_scalar(rng)});
    QPolynomial g2 = poly_in_xstarx({random_scalar(rng), random_scalar(rng)});
    QPolynomial lhs = cexp(normal_mul(normal_mul(involution(g1), f), g2));
    QPolynomial rhs = normal_mul(normal_mul(involution(g1), cexp(f)), g2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cexp constant term of f*f is nonnegative") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    QPolynomial f = random_poly(rng);
    QPolynomial sq = normal_mul(involution(f), f);
    Scalar c00 = cexp(sq).coefficient(0, 0);
    for (double q : {0.5, 1.0, 2.0, 3.0}) {
      auto v = c00.eval(q);
      CHECK(std::abs(v.imag()) < 1e-12);
      CHECK(v.real() >= -1e-12);
    }
  }
}

TEST_CASE("radial conversion") {
  QPolynomial xsx = normal_mul(Xs, X);
  auto r1 = to_radial(xsx);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].r == 1);
  CHECK(r1[0].k == 0);
  CHECK(r1[0].coeff == Scalar::from_int(1));

  // x*^2 x^2 = q^{-1} (x*x)^2
  auto r2 = to_radial(QPolynomial::monomial(2, 2));
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].r == 2);
  CHECK(r2[0].coeff == Scalar::q_power(-1));
  // and (x*x)^2 = q x*^2 x^2
  CHECK(xsx.pow(2) == QPolynomial::monomial(2, 2, Scalar::q_power(1)));

  // top part of (x+x*)^4 includes x^4 with radial coefficient 1
  QPolynomial p4 = (X + Xs).pow(4);
  auto top = p4.homogeneous_part(4);
  bool found = false;
  for (const auto& t : to_radial(top))
    if (t.k == 4) {
      found = true;
      CHECK(t.r == 0);
      CHECK(t.coeff == Scalar::from_int(1));
    }
  CHECK(found);

  CHECK_THROWS_AS(to_radial(QPolynomial::one() + xsx), Error);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    QPolynomial f = random_poly(rng, 5, 4);
    const int d = f.degree();
    if (d < 0) continue;
    QPolynomial top_part = f.homogeneous_part(d);
    CHECK(radial_to_poly(to_radial(top_part)) == top_part);
  }
}

TEST_CASE("cexp radial exponent convention") {
  // x*^n x^n = q^{-n(n-1)/2} (x*x)^n: both routes rebuild the same element
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    QPolynomial f = random_poly(rng);
    QPolynomial diag = cexp(f);
    CHECK(poly_in_xstarx(cexp_radial(f)) == diag);
  }
}

TEST_CASE("symbol of radial square is a positive constant") {
  // (x*x)^2 = q x*^2 x^2; its radial coefficient is q * q^{-1} = 1
  QPolynomial t2 = normal_mul(Xs, X).pow(2);
  SymbolSeries sym = symbol(t2);
  CHECK(sym.m_half == 2);
  for (int grid : {7, 64}) {
    double mn = symbol_min(sym, grid, 0.5);
    CHECK(mn == doctest::Approx(1.0).epsilon(1e-12));
  }
  // (x x*)^2 = q^3 x*^2 x^2 carries the extra q^2
  QPolynomial u2 = normal_mul(QPolynomial::gen_x(), Xs).pow(2);
  CHECK(symbol_min(symbol(u2), 16, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("symbol of x^2 + x*^2 + x*x dips negative") {
  QPolynomial f = QPolynomial::monomial(0, 2) + QPolynomial::monomial(2, 0) +
                  QPolynomial::monomial(1, 1);
  SymbolSeries sym = symbol(f);
  CHECK(sym.m_half == 1);
  double mn = symbol_min(sym, 10000, 0.5);
  CHECK(mn < 0.0);
  // minimum sits at theta = pi: value -2 sqrt(q) * prefactor < 0
  CHECK(symbol_eval(sym, 0.5, M_PI).real() == doctest::Approx(mn).epsilon(1e-6));
}

TEST_CASE("symbol_min on a hand-built pure cosine") {
  SymbolSeries sym;
  sym.m_half = 1;
  sym.pos = {Scalar(), Scalar::from_int(1)};
  sym.neg = {Scalar(), Scalar::from_int(1)};
  CHECK(symbol_min(sym, 4, 2.0) == doctest::Approx(-2.0));
  // constant series
  SymbolSeries c;
  c.m_half = 0;
  c.pos = {Scalar::from_rational(make_rational(3, 2))};
  c.neg = {Scalar()};
  CHECK(symbol_min(c, 5, 2.0) == doctest::Approx(1.5));
}

TEST_CASE("symbol series matches direct sigma evaluation on the circle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    // random Hermitian with even degree
    QPolynomial f = random_hermitian_poly(rng, 4, 4);
    if (f.degree() % 2 != 0 || f.degree() < 2) continue;
    SymbolSeries sym = symbol(f);
    for (double q : {0.5, 2.0}) {
      for (double theta : {0.0, 0.7, 2.3, 3.9}) {
        auto a = symbol_eval(sym, q, theta);
        auto b = symbol_eval_direct(f, q, theta);
        CHECK(std::abs(a - b) < 1e-9 * (1.0 + std::abs(b)));
      }
    }
  }
}

TEST_CASE("symbol rejects odd degree and non-Hermitian minimum") {
  CHECK_THROWS_AS(symbol(X), Error);
  SymbolSeries bad;
  bad.m_half = 1;
  bad.pos = {Scalar(), Scalar::from_int(1)};
  bad.neg = {Scalar(), Scalar::from_int(2)};
  CHECK_THROWS_AS(symbol_min(bad, 8, 2.0), Error);
}

TEST_CASE("hermitian symbol stays real on the grid") {
  std::mt19937_64 rng(37);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 20; ++trial) {
    QPolynomial f = random_hermitian_poly(rng, 6, 5);
    if (f.degree() < 2 || f.degree() % 2 != 0) continue;
    ++done;
    SymbolSeries sym = symbol(f);
    for (double q : {0.5, 2.0}) {
      for (int j = 0; j < 32; ++j) {
        auto v = symbol_eval(sym, q, 2.0 * M_PI * j / 32);
        double scale = 1.0;
        for (int k = 0; k <= sym.m_half; ++k)
          scale += std::abs(sym.pos[k].eval(q)) + std::abs(sym.neg[k].eval(q));
        CHECK(std::abs(v.imag()) <= 1e-12 * scale);
      }
    }
  }
  CHECK(done == 20);
}
