#pragma once

// Test-only oracle: normal ordering in the free *-algebra by local rewriting.
// A word in the letters {x, x*} is reduced by repeatedly replacing the first
// adjacent pair  x x*  with  q x* x  until every x* stands left of every x.
// This is independent of the closed-form product rule in the library and is
// used to cross-check it.

#include <utility>
#include <vector>

#include "qplane/qpoly.hpp"

namespace qplane::testing {

enum class Letter { X, XStar };

using Word = std::vector<Letter>;

inline QPolynomial reduce_word(const Word& word) {
  // (scalar multiple, remaining word) pairs; the relation only rescales,
  // so one word stays one word.
  Scalar coeff = Scalar::from_int(1);
  Word w = word;
  for (;;) {
    bool changed = false;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] == Letter::X && w[j + 1] == Letter::XStar) {
        w[j] = Letter::XStar;
        w[j + 1] = Letter::X;
        coeff *= Scalar::q_power(1);
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  int m = 0, n = 0;
  for (Letter l : w) (l == Letter::XStar ? m : n)++;
  return QPolynomial::monomial(m, n, coeff);
}

inline QPolynomial word_as_product(const Word& word) {
  QPolynomial acc = QPolynomial::one();
  for (Letter l : word)
    acc = normal_mul(acc, l == Letter::X ? QPolynomial::gen_x() : QPolynomial::gen_xstar());
  return acc;
}

}  // namespace qplane::testing
