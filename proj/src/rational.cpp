#include "qplane/rational.hpp"

#include <cctype>

namespace qplane {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  bool neg = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  auto take_digits = [&]() {
    std::string d;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) d += s[pos++];
    return d;
  };
  std::string intpart = take_digits();
  if (intpart.empty()) throw std::invalid_argument("malformed rational: " + s);

  Rational value;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::string den = take_digits();
    if (den.empty() || pos != s.size())
      throw std::invalid_argument("malformed rational: " + s);
    value = Rational(mpz_class(intpart), mpz_class(den));
    if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    value.canonicalize();
  } else if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::string frac = take_digits();
    if (pos != s.size()) throw std::invalid_argument("malformed rational: " + s);
    mpz_class num(intpart + frac);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rational(num, den);
    value.canonicalize();
  } else {
    if (pos != s.size()) throw std::invalid_argument("malformed rational: " + s);
    value = Rational(mpz_class(intpart));
  }
  if (neg) value = -value;
  return value;
}

std::string rational_str(const Rational& r) {
  return r.get_str();
}

}  // namespace qplane
