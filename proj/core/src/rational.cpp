#include "boolmeas/rational.hpp"

#include <cctype>

#include "boolmeas/error.hpp"

namespace boolmeas {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("zero denominator");
  return Rational(num) / Rational(den);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("zero denominator");
  return Rational(num) / Rational(den);
}

Integer pow2(unsigned n) {
  Integer p = 1;
  p <<= n;
  return p;
}

Rational dyadic(unsigned n) { return Rational(Integer(1)) / Rational(pow2(n)); }

Rational floor(const Rational& r) {
  Integer q = numerator(r) / denominator(r);  // truncates toward zero
  if (r < 0 && Rational(q) != r) q -= 1;
  return Rational(q);
}

Rational ceil(const Rational& r) {
  Rational f = floor(r);
  return f == r ? f : f + 1;
}

std::string to_string(const Rational& r) {
  const Integer den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw ValidationError("malformed rational '" + text + "'");
  }
  return make_rational(Integer(num), Integer(den));
}

bool is_dyadic(const Rational& r) {
  Integer d = denominator(r);
  return (d & (d - 1)) == 0;
}

unsigned dyadic_depth(const Rational& r) {
  Integer d = denominator(r);
  unsigned g = 0;
  while (d > 1) {
    d >>= 1;
    ++g;
  }
  return g;
}

}  // namespace boolmeas
