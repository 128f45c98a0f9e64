#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qplane/qpoly.hpp"

namespace qplane {

// Parse failure with the byte offset of the offending character.
struct SourceError : Error {
  std::size_t pos;
  SourceError(std::size_t p, const std::string& message)
      : Error(message), pos(p) {}
};

enum class TokKind {
  X, Star, Q, S, I, Number,
  Plus, Minus, Times, Caret, LParen, RParen,
  End
};

struct ExprToken {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

std::vector<ExprToken> tokenize(std::string_view text);

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := ('-')? factor (('*')? factor)*
//   factor := atom ('^' ('-')? INT)?
//   atom   := 'x' '*'? | 'q' | 's' | 'i' | NUMBER | '(' expr ')'
// Juxtaposition multiplies and factor order is preserved (the algebra is
// noncommutative).  A '*' immediately following 'x' is the involution; any
// other '*' is multiplication.  Decimal and a/b literals are exact rationals.
// Negative exponents are allowed on q, s and numbers only.
QPolynomial parse(std::string_view text);

// Canonical rendering; parse(print(f)) == f exactly.  Terms are ordered by
// (degree, m); even s-powers print as q^k.
std::string print(const QPolynomial& f);

std::string print(const Scalar& c);

// "caret" diagnostic line pair for a SourceError against its input.
std::string format_source_error(std::string_view text, const SourceError& err);

}  // namespace qplane
