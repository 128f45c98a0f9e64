#include "qplane/symbol.hpp"

#include <cmath>

namespace qplane {

namespace {
constexpr double kImagTol = 1e-12;
}

bool SymbolSeries::hermitian() const {
  for (int k = 1; k <= m_half; ++k)
    if (!(neg[k] == pos[k].conj())) return false;
  return true;
}

SymbolSeries symbol(const QPolynomial& f) {
  const int d = f.degree();
  if (d < 0) throw Error("symbol of the zero element is undefined");
  if (d % 2 != 0) throw Error("symbol requires even top degree");
  SymbolSeries sym;
  sym.m_half = d / 2;
  sym.pos.assign(sym.m_half + 1, Scalar());
  sym.neg.assign(sym.m_half + 1, Scalar());

  // Top part of even degree only contains monomials with even n - m.
  for (const auto& t : to_radial(f.homogeneous_part(d))) {
    const int k = std::abs(t.k) / 2;
    // q^{-k r} q^{k/2} = s^{k - 2 k r}
    Scalar c = t.coeff.shifted(k - 2 * k * t.r);
    if (t.k >= 0)
      sym.pos[k] += c;
    else
      sym.neg[k] += c;
  }
  return sym;
}

std::complex<double> symbol_eval(const SymbolSeries& sym, double q_val, double theta) {
  std::complex<double> acc = sym.pos[0].eval(q_val);
  for (int k = 1; k <= sym.m_half; ++k) {
    const std::complex<double> w(std::cos(k * theta), std::sin(k * theta));
    acc += sym.pos[k].eval(q_val) * w + sym.neg[k].eval(q_val) * std::conj(w);
  }
  return acc;
}

std::complex<double> symbol_eval_direct(const QPolynomial& f, double q_val, double theta) {
  const int d = f.degree();
  if (d < 0 || d % 2 != 0) throw Error("symbol requires even top degree");
  const std::complex<double> omega = std::sqrt(q_val) * std::complex<double>(std::cos(theta), std::sin(theta));
  std::complex<double> acc(0.0, 0.0);
  for (const auto& t : to_radial(f.homogeneous_part(d))) {
    const int k = std::abs(t.k) / 2;
    const double mod = std::pow(std::abs(omega), -2.0 * t.r * k);
    const std::complex<double> w = std::pow(omega, k);
    acc += t.coeff.eval(q_val) * mod * (t.k >= 0 ? w : std::conj(w));
  }
  return acc;
}

double symbol_min(const SymbolSeries& sym, int grid, double q_val) {
  if (grid < 3) throw Error("symbol_min needs a grid of at least 3 points");
  if (!sym.hermitian()) throw Error("symbol_min requires a Hermitian series");
  double best = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (int k = 0; k <= sym.m_half; ++k)
    scale += std::abs(sym.pos[k].eval(q_val)) + std::abs(sym.neg[k].eval(q_val));
  for (int j = 0; j < grid; ++j) {
    const double theta = 2.0 * M_PI * j / grid;
    const std::complex<double> v = symbol_eval(sym, q_val, theta);
    if (std::abs(v.imag()) > kImagTol * std::max(1.0, scale))
      throw InternalError("symbol series produced a non-real value on a Hermitian input");
    best = std::min(best, v.real());
  }
  return best;
}

}  // namespace qplane
