#include "qplane/scalar.hpp"

#include <cmath>

namespace qplane {

Scalar Scalar::with_term(int power, GaussQ coeff) {
  Scalar s;
  if (!coeff.is_zero()) s.coeffs_.emplace(power, std::move(coeff));
  return s;
}

bool Scalar::is_real() const {
  for (const auto& [p, c] : coeffs_)
    if (c.im != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  if (coeffs_.empty()) return true;
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_real();
}

Rational Scalar::rational_value() const {
  if (coeffs_.empty()) return Rational(0);
  return coeffs_.begin()->second.re;
}

Scalar Scalar::conj() const {
  Scalar out;
  for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p, c.conj());
  return out;
}

Scalar Scalar::shifted(int delta) const {
  Scalar out;
  for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p + delta, c);
  return out;
}

void Scalar::prune(int power) {
  auto it = coeffs_.find(power);
  if (it != coeffs_.end() && it->second.is_zero()) coeffs_.erase(it);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [p, c] : o.coeffs_) {
    coeffs_[p] += c;
    prune(p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [p, c] : o.coeffs_) {
    coeffs_[p] -= c;
    prune(p);
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  Scalar out;
  for (const auto& [p, c] : a.coeffs_) out.coeffs_.emplace(p, -c);
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [pa, ca] : a.coeffs_)
    for (const auto& [pb, cb] : b.coeffs_) {
      out.coeffs_[pa + pb] += ca * cb;
      out.prune(pa + pb);
    }
  return out;
}

std::complex<double> Scalar::eval(double q_val) const {
  const double s = std::sqrt(q_val);
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [p, c] : coeffs_) {
    const double w = std::pow(s, p);
    acc += std::complex<double>(c.re.get_d() * w, c.im.get_d() * w);
  }
  return acc;
}

QuadVal Scalar::reduce(const Rational& q) const {
  QuadVal out;
  for (const auto& [p, c] : coeffs_) {
    // floor division so that odd negative powers land on q^k * s correctly
    int k = (p >= 0) ? p / 2 : -((-p + 1) / 2);
    bool odd = (p % 2) != 0;
    Rational qk(1);
    if (k >= 0) {
      for (int i = 0; i < k; ++i) qk *= q;
    } else {
      for (int i = 0; i < -k; ++i) qk /= q;
    }
    GaussQ scaled = c * GaussQ(qk);
    if (odd)
      out.c1 += scaled;
    else
      out.c0 += scaled;
  }
  return out;
}

std::complex<double> quadval_eval(const QuadVal& v, double q_val) {
  const double s = std::sqrt(q_val);
  return std::complex<double>(v.c0.re.get_d() + v.c1.re.get_d() * s,
                              v.c0.im.get_d() + v.c1.im.get_d() * s);
}

}  // namespace qplane
