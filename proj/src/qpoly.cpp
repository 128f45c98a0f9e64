#include "qplane/qpoly.hpp"

#include <algorithm>

namespace qplane {

QPolynomial QPolynomial::monomial(int m, int n, Scalar coeff) {
  QPolynomial p;
  if (m < 0 || n < 0) throw Error("monomial exponents must be nonnegative");
  if (!coeff.is_zero()) p.terms_.emplace(Monomial{m, n}, std::move(coeff));
  return p;
}

int QPolynomial::degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

Scalar QPolynomial::coefficient(int m, int n) const {
  auto it = terms_.find(Monomial{m, n});
  return it == terms_.end() ? Scalar() : it->second;
}

void QPolynomial::set_coefficient(int m, int n, Scalar c) {
  Monomial key{m, n};
  if (c.is_zero())
    terms_.erase(key);
  else
    terms_[key] = std::move(c);
}

bool QPolynomial::is_hermitian() const {
  for (const auto& [mono, c] : terms_)
    if (!(coefficient(mono.n, mono.m) == c.conj())) return false;
  return true;
}

bool QPolynomial::is_diagonal() const {
  for (const auto& [mono, c] : terms_)
    if (mono.m != mono.n) return false;
  return true;
}

void QPolynomial::prune(const Monomial& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [mono, c] : o.terms_) {
    terms_[mono] += c;
    prune(mono);
  }
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [mono, c] : o.terms_) {
    terms_[mono] -= c;
    prune(mono);
  }
  return *this;
}

QPolynomial operator-(const QPolynomial& a) {
  QPolynomial out;
  for (const auto& [mono, c] : a.terms_) out.terms_.emplace(mono, -c);
  return out;
}

QPolynomial QPolynomial::scaled(const Scalar& c) const {
  QPolynomial out;
  if (c.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) {
    Scalar v = coeff * c;
    if (!v.is_zero()) out.terms_.emplace(mono, std::move(v));
  }
  return out;
}

QPolynomial QPolynomial::pow(unsigned e) const {
  QPolynomial acc = QPolynomial::one();
  for (unsigned i = 0; i < e; ++i) acc = normal_mul(acc, *this);
  return acc;
}

QPolynomial QPolynomial::homogeneous_part(int d) const {
  QPolynomial out;
  for (const auto& [mono, c] : terms_)
    if (mono.degree() == d) out.terms_.emplace(mono, c);
  return out;
}

std::map<Monomial, std::complex<double>> QPolynomial::eval_coeffs(double q_val) const {
  std::map<Monomial, std::complex<double>> out;
  for (const auto& [mono, c] : terms_) out.emplace(mono, c.eval(q_val));
  return out;
}

std::map<Monomial, QuadVal> QPolynomial::reduce_coeffs(const Rational& q) const {
  std::map<Monomial, QuadVal> out;
  for (const auto& [mono, c] : terms_) {
    QuadVal v = c.reduce(q);
    if (!v.is_zero()) out.emplace(mono, std::move(v));
  }
  return out;
}

bool QPolynomial::equals_at(const QPolynomial& o, const Rational& q) const {
  return reduce_coeffs(q) == o.reduce_coeffs(q);
}

QPolynomial normal_mul(const QPolynomial& f, const QPolynomial& g) {
  QPolynomial out;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) {
      // (x*^a x^b)(x*^c x^d) = q^{bc} x*^{a+c} x^{b+d}
      Scalar c = (cf * cg).shifted(2 * mf.n * mg.m);
      QPolynomial term = QPolynomial::monomial(mf.m + mg.m, mf.n + mg.n, std::move(c));
      out += term;
    }
  return out;
}

QPolynomial involution(const QPolynomial& f) {
  QPolynomial out;
  for (const auto& [mono, c] : f.terms())
    out += QPolynomial::monomial(mono.n, mono.m, c.conj());
  return out;
}

QPolynomial cexp(const QPolynomial& f) {
  QPolynomial out;
  for (const auto& [mono, c] : f.terms())
    if (mono.m == mono.n) out += QPolynomial::monomial(mono.m, mono.n, c);
  return out;
}

std::vector<Scalar> cexp_radial(const QPolynomial& f) {
  std::vector<Scalar> coeffs;
  for (const auto& [mono, c] : f.terms()) {
    if (mono.m != mono.n) continue;
    const int n = mono.n;
    if (static_cast<int>(coeffs.size()) <= n) coeffs.resize(n + 1);
    // x*^n x^n = q^{-n(n-1)/2} (x*x)^n
    coeffs[n] += c.shifted(-n * (n - 1));
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

std::vector<RadialTerm> to_radial(const QPolynomial& f) {
  if (f.is_zero()) return {};
  const int d = f.degree();
  std::vector<RadialTerm> out;
  for (const auto& [mono, c] : f.terms()) {
    if (mono.degree() != d) throw Error("to_radial requires a homogeneous element");
    const int r = std::min(mono.m, mono.n);
    const int k = mono.n - mono.m;
    // x*^m x^n = q^{-r(r-1)/2} (x*x)^r x^{n-m}   (n >= m)
    //          = q^{-r(r-1)/2} x*^{m-n} (x*x)^r  (m >  n)
    out.push_back(RadialTerm{r, k, c.shifted(-r * (r - 1))});
  }
  return out;
}

QPolynomial radial_to_poly(const std::vector<RadialTerm>& terms) {
  QPolynomial out;
  for (const auto& t : terms) {
    const int m = t.r + (t.k < 0 ? -t.k : 0);
    const int n = t.r + (t.k > 0 ? t.k : 0);
    out += QPolynomial::monomial(m, n, t.coeff.shifted(t.r * (t.r - 1)));
  }
  return out;
}

QPolynomial poly_in_xstarx(const std::vector<Scalar>& coeffs) {
  QPolynomial out;
  const QPolynomial t = normal_mul(QPolynomial::gen_xstar(), QPolynomial::gen_x());
  QPolynomial tn = QPolynomial::one();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    out += tn.scaled(coeffs[n]);
    tn = normal_mul(tn, t);
  }
  return out;
}

}  // namespace qplane
