#include "qplane/expr.hpp"

#include <cctype>
#include <sstream>

namespace qplane {

namespace {
constexpr long kMaxExponent = 512;
}

std::vector<ExprToken> tokenize(std::string_view text) {
  std::vector<ExprToken> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos < text.size() && (text[pos] == '.' || text[pos] == '/')) {
        const char sep = text[pos];
        std::size_t after = pos + 1;
        if (after < text.size() && std::isdigit(static_cast<unsigned char>(text[after]))) {
          pos = after;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        } else if (sep == '.') {
          throw SourceError(pos, "malformed number: digits required after '.'");
        }
        // a bare '/' with no digits after it is left for the '/' error below
      }
      out.push_back({TokKind::Number, std::string(text.substr(start, pos - start)), start});
      continue;
    }
    TokKind kind;
    switch (c) {
      case 'x': kind = TokKind::X; break;
      case 'q': kind = TokKind::Q; break;
      case 's': kind = TokKind::S; break;
      case 'i': kind = TokKind::I; break;
      case '+': kind = TokKind::Plus; break;
      case '-': kind = TokKind::Minus; break;
      case '^': kind = TokKind::Caret; break;
      case '(': kind = TokKind::LParen; break;
      case ')': kind = TokKind::RParen; break;
      case '*':
        // adjacent to a preceding x: the involution star
        if (!out.empty() && out.back().kind == TokKind::X && out.back().pos + 1 == pos)
          kind = TokKind::Star;
        else
          kind = TokKind::Times;
        break;
      default:
        throw SourceError(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), pos});
    ++pos;
  }
  out.push_back({TokKind::End, "", text.size()});
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<ExprToken> toks) : toks_(std::move(toks)) {}

  QPolynomial run() {
    QPolynomial f = expr();
    if (peek().kind != TokKind::End)
      throw SourceError(peek().pos, "unexpected trailing input");
    return f;
  }

 private:
  const ExprToken& peek() const { return toks_[at_]; }
  const ExprToken& advance() { return toks_[at_++]; }

  static bool starts_factor(TokKind k) {
    switch (k) {
      case TokKind::X:
      case TokKind::Q:
      case TokKind::S:
      case TokKind::I:
      case TokKind::Number:
      case TokKind::LParen:
        return true;
      default:
        return false;
    }
  }

  QPolynomial expr() {
    QPolynomial acc = term();
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const bool minus = advance().kind == TokKind::Minus;
      QPolynomial t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  QPolynomial term() {
    bool negate = false;
    if (peek().kind == TokKind::Minus) {
      advance();
      negate = true;
    }
    QPolynomial acc = factor();
    for (;;) {
      if (peek().kind == TokKind::Times) {
        advance();
        acc = normal_mul(acc, factor());
      } else if (starts_factor(peek().kind)) {
        acc = normal_mul(acc, factor());
      } else {
        break;
      }
    }
    return negate ? -acc : acc;
  }

  long exponent() {
    bool neg = false;
    if (peek().kind == TokKind::Minus) {
      advance();
      neg = true;
    }
    if (peek().kind != TokKind::Number)
      throw SourceError(peek().pos, "expected integer exponent after '^'");
    const ExprToken tok = advance();
    if (tok.text.find('.') != std::string::npos || tok.text.find('/') != std::string::npos)
      throw SourceError(tok.pos, "exponent must be an integer");
    long e = 0;
    try {
      e = std::stol(tok.text);
    } catch (const std::exception&) {
      throw SourceError(tok.pos, "exponent too large");
    }
    if (e > kMaxExponent) throw SourceError(tok.pos, "exponent too large");
    return neg ? -e : e;
  }

  QPolynomial factor() {
    const ExprToken tok = peek();
    enum class Base { X, XStar, Q, S, I, Num, Paren } base;
    QPolynomial paren;
    Rational num;
    switch (tok.kind) {
      case TokKind::X:
        advance();
        if (peek().kind == TokKind::Star) {
          advance();
          base = Base::XStar;
        } else {
          base = Base::X;
        }
        break;
      case TokKind::Q: advance(); base = Base::Q; break;
      case TokKind::S: advance(); base = Base::S; break;
      case TokKind::I: advance(); base = Base::I; break;
      case TokKind::Number:
        advance();
        try {
          num = parse_rational(tok.text);
        } catch (const std::exception& e) {
          throw SourceError(tok.pos, e.what());
        }
        base = Base::Num;
        break;
      case TokKind::LParen: {
        advance();
        paren = expr();
        if (peek().kind != TokKind::RParen)
          throw SourceError(peek().pos, "expected ')'");
        advance();
        base = Base::Paren;
        break;
      }
      default:
        throw SourceError(tok.pos, "expected a factor");
    }

    long e = 1;
    std::size_t epos = tok.pos;
    if (peek().kind == TokKind::Caret) {
      advance();
      epos = peek().pos;
      e = exponent();
    }

    switch (base) {
      case Base::X:
      case Base::XStar: {
        if (e < 0)
          throw SourceError(epos, "negative exponents are not allowed on x or x*");
        const int m = base == Base::XStar ? static_cast<int>(e) : 0;
        const int n = base == Base::X ? static_cast<int>(e) : 0;
        return QPolynomial::monomial(m, n);
      }
      case Base::Q:
        return QPolynomial::constant(Scalar::q_power(static_cast<int>(e)));
      case Base::S:
        return QPolynomial::constant(Scalar::s_power(static_cast<int>(e)));
      case Base::I: {
        // i^e cycles with period 4
        long r = ((e % 4) + 4) % 4;
        static const GaussQ cycle[4] = {GaussQ(Rational(1)), GaussQ(Rational(0), Rational(1)),
                                        GaussQ(Rational(-1)), GaussQ(Rational(0), Rational(-1))};
        return QPolynomial::constant(Scalar::with_term(0, cycle[r]));
      }
      case Base::Num: {
        if (e < 0) {
          if (num == 0) throw SourceError(epos, "zero cannot have a negative exponent");
          num = 1 / num;
          e = -e;
        }
        Rational acc(1);
        for (long j = 0; j < e; ++j) acc *= num;
        return QPolynomial::constant(Scalar::from_rational(acc));
      }
      case Base::Paren: {
        if (e < 0)
          throw SourceError(epos, "negative exponents are only allowed on q, s and numbers");
        return paren.pow(static_cast<unsigned>(e));
      }
    }
    throw SourceError(tok.pos, "expected a factor");  // unreachable
  }

  std::vector<ExprToken> toks_;
  std::size_t at_ = 0;
};

struct Atom {
  bool negative;
  std::string magnitude;  // without sign
};

std::string rational_abs_str(const Rational& r) {
  Rational a = r < 0 ? Rational(-r) : r;
  return a.get_str();
}

void append_power(std::string& out, int p) {
  if (p == 0) return;
  if (!out.empty()) out += ' ';
  if (p % 2 == 0) {
    const int k = p / 2;
    out += k == 1 ? "q" : "q^" + std::to_string(k);
  } else {
    out += p == 1 ? "s" : "s^" + std::to_string(p);
  }
}

std::vector<Atom> scalar_atoms(const Scalar& c) {
  std::vector<Atom> atoms;
  // descending s-powers, real part before imaginary part
  for (auto it = c.coeffs().rbegin(); it != c.coeffs().rend(); ++it) {
    const int p = it->first;
    const GaussQ& g = it->second;
    if (g.re != 0) {
      Atom a;
      a.negative = g.re < 0;
      std::string mag;
      if (!(abs(g.re.get_num()) == 1 && g.re.get_den() == 1) || p == 0)
        mag = rational_abs_str(g.re);
      append_power(mag, p);
      if (mag.empty()) mag = "1";
      a.magnitude = mag;
      atoms.push_back(std::move(a));
    }
    if (g.im != 0) {
      Atom a;
      a.negative = g.im < 0;
      std::string mag;
      if (!(abs(g.im.get_num()) == 1 && g.im.get_den() == 1))
        mag = rational_abs_str(g.im) + " i";
      else
        mag = "i";
      append_power(mag, p);
      a.magnitude = mag;
      atoms.push_back(std::move(a));
    }
  }
  return atoms;
}

std::string join_atoms(const std::vector<Atom>& atoms) {
  std::string out;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    if (j == 0)
      out += atoms[j].negative ? "-" : "";
    else
      out += atoms[j].negative ? "-" : "+";
    out += atoms[j].magnitude;
  }
  return out;
}

std::string monomial_str(const Monomial& mono) {
  std::string out;
  if (mono.m > 0) out += "x*^" + std::to_string(mono.m);
  if (mono.n > 0) {
    if (!out.empty()) out += ' ';
    out += "x^" + std::to_string(mono.n);
  }
  return out;
}

}  // namespace

QPolynomial parse(std::string_view text) {
  return Parser(tokenize(text)).run();
}

std::string print(const Scalar& c) {
  if (c.is_zero()) return "0";
  const std::vector<Atom> atoms = scalar_atoms(c);
  if (atoms.size() == 1) return (atoms[0].negative ? "-" : "") + atoms[0].magnitude;
  return "(" + join_atoms(atoms) + ")";
}

std::string print(const QPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : f.terms()) {
    const std::vector<Atom> atoms = scalar_atoms(coeff);
    const std::string mono_str = monomial_str(mono);

    bool neg = false;
    std::string body;
    if (atoms.size() == 1) {
      neg = atoms[0].negative;
      if (mono_str.empty())
        body = atoms[0].magnitude;
      else if (atoms[0].magnitude == "1")
        body = mono_str;
      else
        body = atoms[0].magnitude + " " + mono_str;
    } else {
      body = "(" + join_atoms(atoms) + ")";
      if (!mono_str.empty()) body += " " + mono_str;
    }

    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string format_source_error(std::string_view text, const SourceError& err) {
  std::ostringstream os;
  os << "parse error at offset " << err.pos << ": " << err.what() << "\n";
  os << text << "\n";
  for (std::size_t j = 0; j < err.pos && j < text.size() + 1; ++j) os << ' ';
  os << '^';
  return os.str();
}

}  // namespace qplane
