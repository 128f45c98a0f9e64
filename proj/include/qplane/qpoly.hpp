#pragma once

#include <map>
#include <vector>

#include "qplane/scalar.hpp"

namespace qplane {

// Basis monomial x*^m x^n of the algebra <x, x* | x x* = q x* x>.
struct Monomial {
  int m = 0;
  int n = 0;

  int degree() const { return m + n; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.m == b.m && a.n == b.n; }
  // Canonical order: by total degree, then by m.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.m < b.m;
  }
};

// Element of the algebra in normal form: finitely supported map from basis
// monomials x*^m x^n to Scalar coefficients.  Zero coefficients are never
// stored, so equality is equality of the maps.
class QPolynomial {
 public:
  QPolynomial() = default;

  static QPolynomial zero() { return {}; }
  static QPolynomial one() { return monomial(0, 0); }
  static QPolynomial gen_x() { return monomial(0, 1); }
  static QPolynomial gen_xstar() { return monomial(1, 0); }
  static QPolynomial monomial(int m, int n, Scalar coeff = Scalar::from_int(1));
  static QPolynomial constant(Scalar c) { return monomial(0, 0, std::move(c)); }

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is the sentinel -1.
  int degree() const;
  Scalar coefficient(int m, int n) const;
  void set_coefficient(int m, int n, Scalar c);

  bool is_hermitian() const;
  bool is_diagonal() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator-(const QPolynomial& a);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  QPolynomial scaled(const Scalar& c) const;
  QPolynomial pow(unsigned e) const;

  // Extracts the homogeneous part of the given total degree.
  QPolynomial homogeneous_part(int d) const;

  // Coefficients instantiated at a numeric q.
  std::map<Monomial, std::complex<double>> eval_coeffs(double q_val) const;
  // Coefficients reduced modulo s^2 - q (exact).
  std::map<Monomial, QuadVal> reduce_coeffs(const Rational& q) const;
  // Exact equality of elements of the algebra at a fixed rational q.
  bool equals_at(const QPolynomial& o, const Rational& q) const;

 private:
  void prune(const Monomial& key);
  std::map<Monomial, Scalar> terms_;
};

// Product in normal form.  On basis elements the rewrite x^b x*^c = q^{bc} x*^c x^b
// derived from x x* = q x* x gives
//   (x*^a x^b)(x*^c x^d) = q^{bc} x*^{a+c} x^{b+d},
// extended bilinearly over Scalar coefficients.
QPolynomial normal_mul(const QPolynomial& f, const QPolynomial& g);

// The involution: (x*^m x^n)* = x*^n x^m with conjugated coefficients.
QPolynomial involution(const QPolynomial& f);

// Conditional expectation onto the diagonal subalgebra: keeps the terms
// alpha_{nn} x*^n x^n and drops everything else.
QPolynomial cexp(const QPolynomial& f);

// Writes the diagonal polynomial cexp(f) in the radial generator t = x*x,
// using x*^n x^n = q^{-n(n-1)/2} (x*x)^n.  Returns the coefficient of t^n at
// index n.
std::vector<Scalar> cexp_radial(const QPolynomial& f);

// One term of the radial form of a homogeneous element:
//   k >= 0:  coeff * (x*x)^r x^k
//   k <  0:  coeff * x*^{|k|} (x*x)^r
struct RadialTerm {
  int r = 0;
  int k = 0;
  Scalar coeff;
};

// Radial form of a homogeneous element (all stored terms of equal total
// degree; throws Error otherwise).  Uses (x*x)^r = q^{r(r-1)/2} x*^r x^r.
std::vector<RadialTerm> to_radial(const QPolynomial& f);

// Expands a radial form back to normal form (inverse of to_radial).
QPolynomial radial_to_poly(const std::vector<RadialTerm>& terms);

// Builds p(x*x) in normal form from the coefficient list of a polynomial in
// one variable t (coeffs[n] multiplies t^n).
QPolynomial poly_in_xstarx(const std::vector<Scalar>& coeffs);

}  // namespace qplane
