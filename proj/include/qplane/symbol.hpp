#pragma once

#include <complex>
#include <vector>

#include "qplane/qpoly.hpp"

namespace qplane {

// Trigonometric series attached to the top-degree part of an even-degree
// element.  S(theta) = sum_{k>=0} pos[k] e^{ik theta} + sum_{k>=1} neg[k] e^{-ik theta},
// with exact Scalar coefficients (the q-power prefactors are folded in).
// For Hermitian input neg[k] equals the conjugate of pos[k].
struct SymbolSeries {
  int m_half = 0;               // half the top degree
  std::vector<Scalar> pos;      // size m_half + 1, index k
  std::vector<Scalar> neg;      // size m_half + 1, index k (entry 0 unused)

  bool hermitian() const;
};

// Builds the symbol of f.  Requires even top degree.  Each radial term
// coeff * (x*x)^r x^{2k} of the top part contributes coeff * q^{-kr} * q^{k/2}
// to the e^{ik theta} coefficient; x*-side terms go to the e^{-ik theta} side.
// On the evaluation circle |omega| = sqrt(q) this matches the function
//   sigma_f(omega) = sum_r b_r |omega|^{-r(m-2r)} omega^{m/2-r} + conjugate side.
SymbolSeries symbol(const QPolynomial& f);

// Series value at a grid angle.
std::complex<double> symbol_eval(const SymbolSeries& sym, double q_val, double theta);

// Direct evaluation of sigma_f at omega = sqrt(q) e^{i theta} from the radial
// data, without building the series.  Used to cross-check the two forms.
std::complex<double> symbol_eval_direct(const QPolynomial& f, double q_val, double theta);

// Minimum of S over theta = 2 pi j / grid, j = 0..grid-1.  Requires a
// Hermitian series (neg[k] == conj(pos[k]), checked exactly); the imaginary
// part is verified to vanish to 1e-12 at every grid point.
double symbol_min(const SymbolSeries& sym, int grid, double q_val);

}  // namespace qplane
