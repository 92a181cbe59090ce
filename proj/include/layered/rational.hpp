#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace layered {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization) into lowest terms.
Rational parse_rational(std::string_view text);

/// Renders in lowest terms: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor of a rational as an integer.
Integer floor(const Rational& q);

/// q^k for k >= 0.
Rational pow(const Rational& q, unsigned long k);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace layered
