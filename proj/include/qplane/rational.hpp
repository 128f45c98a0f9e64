#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qplane {

using Rational = mpq_class;

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an internal cross-check fails (two routes to the same value
// disagree).  Callers should treat this as a bug, not as bad input.
struct InternalError : Error {
  using Error::Error;
};

Rational make_rational(long long num, long long den = 1);

// Parses "3", "-7/2", "0.25" into an exact rational.  Decimal literals are
// exact: "3.7" becomes 37/10.  Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

std::string rational_str(const Rational& r);

// Gaussian rational: re + im*i with exact rational parts.
struct GaussQ {
  Rational re{0};
  Rational im{0};

  GaussQ() = default;
  GaussQ(Rational r) : re(std::move(r)) {}
  GaussQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussQ conj() const { return {re, Rational(-im)}; }

  GaussQ& operator+=(const GaussQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussQ& operator-=(const GaussQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator-(const GaussQ& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    Rational re = a.re * b.re - a.im * b.im;
    Rational im = a.re * b.im + a.im * b.re;
    return {re, im};
  }
  friend bool operator==(const GaussQ& a, const GaussQ& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace qplane
