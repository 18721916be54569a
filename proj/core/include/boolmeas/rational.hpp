#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace boolmeas {

// Exact rationals backed by GMP. Expression templates are off so `auto`
// always holds a value.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// 2^-n as an exact rational.
Rational dyadic(unsigned n);
Integer pow2(unsigned n);

Rational floor(const Rational& r);
Rational ceil(const Rational& r);

// "num/den", or "num" when den == 1.
std::string to_string(const Rational& r);

// Parses "num/den" or "num"; throws ValidationError on malformed input.
Rational parse_rational(const std::string& text);

// Least common multiple of the denominators.
template <typename Range>
Integer common_denominator(const Range& values) {
  Integer l = 1;
  for (const Rational& v : values) {
    l = boost::multiprecision::lcm(l, denominator(v));
  }
  return l;
}

// True iff the denominator is a power of two.
bool is_dyadic(const Rational& r);

// Smallest g with r * 2^g integral; only meaningful when is_dyadic(r).
unsigned dyadic_depth(const Rational& r);

}  // namespace boolmeas
