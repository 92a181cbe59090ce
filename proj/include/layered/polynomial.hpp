#pragma once

// Univariate polynomials over Q. SignedPoly is the ring Q[x] (the difference
// ring of the positive polynomial semiring); PosPoly is the semiring of
// non-zero polynomials with positive coefficients.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "layered/rational.hpp"

namespace layered {

class SignedPoly {
 public:
  using Terms = std::map<unsigned, Rational>;

  SignedPoly() = default;
  SignedPoly(Rational c);
  SignedPoly(long c) : SignedPoly(Rational(c)) {}
  /// Zero coefficients are dropped.
  explicit SignedPoly(const Terms& terms);
  /// Dense coefficients c_0, c_1, ...
  static SignedPoly from_coeffs(const std::vector<Rational>& coeffs);
  static SignedPoly monomial(Rational c, unsigned degree);
  static SignedPoly x() { return monomial(Rational(1), 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
  Rational coeff(unsigned k) const;
  Rational leading_coeff() const;
  bool is_monic() const { return !is_zero() && leading_coeff() == 1; }
  /// Dense coefficients c_0..c_{degree}.
  std::vector<Rational> coeffs() const;

  Rational eval(const Rational& x) const;
  SignedPoly derivative() const;
  SignedPoly monic() const;

  SignedPoly& operator+=(const SignedPoly& o);
  SignedPoly& operator-=(const SignedPoly& o);
  SignedPoly& operator*=(const SignedPoly& o);
  friend SignedPoly operator+(SignedPoly a, const SignedPoly& b) { return a += b; }
  friend SignedPoly operator-(SignedPoly a, const SignedPoly& b) { return a -= b; }
  friend SignedPoly operator*(SignedPoly a, const SignedPoly& b) { return a *= b; }
  SignedPoly operator-() const;

  friend bool operator==(const SignedPoly&, const SignedPoly&) = default;

 private:
  void add_term(unsigned k, const Rational& c);
  Terms terms_;
};

/// Quotient and remainder over Q; throws DivisionByZero for b = 0.
std::pair<SignedPoly, SignedPoly> divmod(const SignedPoly& a, const SignedPoly& b);
SignedPoly operator%(const SignedPoly& a, const SignedPoly& b);
/// Monic gcd (zero when both are zero).
SignedPoly gcd(const SignedPoly& a, const SignedPoly& b);

struct ExtendedGcd {
  SignedPoly g, s, t;  // s*a + t*b = g, g monic
};
ExtendedGcd extended_gcd(const SignedPoly& a, const SignedPoly& b);

/// Number of distinct real roots in the half-open interval (lo, hi].
/// Either bound may be absent for -inf / +inf.
std::size_t count_real_roots(const SignedPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

/// Irreducible over Q (degree >= 1). Rational root test, then a search for
/// integer factors of each degree up to deg/2 by interpolation.
bool is_irreducible(const SignedPoly& p);

/// "x^2 - 2", "1/2*x^3 + x", "-x + 3"; the variable name is `var`.
SignedPoly parse_polynomial(std::string_view text, std::string_view var = "x");
std::string to_string(const SignedPoly& p, std::string_view var = "x");

class PosPoly {
 public:
  /// Throws EmptyPolynomial for zero and NonPositiveCoefficient for any
  /// negative coefficient.
  explicit PosPoly(SignedPoly p);
  static PosPoly constant(Rational c) { return PosPoly(SignedPoly(std::move(c))); }

  const SignedPoly& poly() const noexcept { return p_; }
  operator const SignedPoly&() const noexcept { return p_; }

  friend PosPoly operator+(const PosPoly& a, const PosPoly& b) { return PosPoly(a.p_ + b.p_); }
  friend PosPoly operator*(const PosPoly& a, const PosPoly& b) { return PosPoly(a.p_ * b.p_); }
  friend bool operator==(const PosPoly&, const PosPoly&) = default;

 private:
  SignedPoly p_;
};

inline std::string to_string(const PosPoly& p, std::string_view var = "x") { return to_string(p.poly(), var); }

}  // namespace layered
