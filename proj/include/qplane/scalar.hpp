#pragma once

#include <complex>
#include <map>

#include "qplane/rational.hpp"

namespace qplane {

// Value of a Scalar after imposing s^2 = q for a fixed rational q:
// every Laurent polynomial in s collapses to c0 + c1*s.
struct QuadVal {
  GaussQ c0;
  GaussQ c1;

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend bool operator==(const QuadVal& a, const QuadVal& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
};

// Exact coefficient ring of the algebra: Laurent polynomials in the formal
// square root s of the deformation parameter (q = s^2), with Gaussian
// rational coefficients.  s stays symbolic; numbers only appear through
// eval() or reduce().
class Scalar {
 public:
  Scalar() = default;

  static Scalar from_rational(const Rational& r) { return with_term(0, GaussQ(r)); }
  static Scalar from_int(long v) { return with_term(0, GaussQ(Rational(v))); }
  static Scalar imaginary_unit() { return with_term(0, GaussQ(Rational(0), Rational(1))); }
  // coeff * s^power
  static Scalar with_term(int power, GaussQ coeff);
  static Scalar s_power(int k) { return with_term(k, GaussQ(Rational(1))); }
  static Scalar q_power(int k) { return with_term(2 * k, GaussQ(Rational(1))); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_real() const;
  // True when the scalar is a plain rational (single s^0 term, no imaginary part).
  bool is_rational() const;
  // The s^0 coefficient viewed as a rational; only valid when is_rational().
  Rational rational_value() const;

  const std::map<int, GaussQ>& coeffs() const { return coeffs_; }

  Scalar conj() const;
  // Multiplies by s^delta (shifts every exponent).
  Scalar shifted(int delta) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator-(const Scalar& a);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.coeffs_ == b.coeffs_; }

  // Numeric value at s = sqrt(q_val); requires q_val > 0.
  std::complex<double> eval(double q_val) const;

  // Exact reduction modulo s^2 - q: s^{2k} -> q^k, s^{2k+1} -> q^k * s.
  QuadVal reduce(const Rational& q) const;

 private:
  void prune(int power);
  std::map<int, GaussQ> coeffs_;
};

std::complex<double> quadval_eval(const QuadVal& v, double q_val);

}  // namespace qplane
