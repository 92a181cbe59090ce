#pragma once

// Simple extensions of the cancellative semifield Q>0.
//
// An algebraic generator is a positive real root d of a monic irreducible
// m in Q[x] that is not a positive polynomial. Elements of Q(d) are stored in
// the basis 1, d, ..., d^{n-1}; the semifield generated by d is the part of
// that field reachable with non-negative coefficients. The transcendental
// case is the semifield of positive rational functions.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "layered/polynomial.hpp"

namespace layered {

struct SignSplit {
  PosPoly plus;   // positive-coefficient part of m
  PosPoly minus;  // negated negative-coefficient part of m
};

/// m = m_plus - m_minus with disjoint supports. NoSignChange if m has no
/// coefficient of one of the two signs.
SignSplit diff_split(const SignedPoly& m);

struct Interval {
  Rational lo, hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

class AlgebraicGenerator {
 public:
  const SignedPoly& minimal_polynomial() const noexcept { return m_; }
  const Interval& interval() const noexcept { return interval_; }
  int degree() const noexcept { return m_.degree(); }

  /// An isolating interval of width at most `width`.
  Interval refined(const Rational& width) const;

  /// Same polynomial and the same root.
  friend bool operator==(const AlgebraicGenerator& a, const AlgebraicGenerator& b);

 private:
  friend AlgebraicGenerator validate_generator(const SignedPoly& m, const Interval& interval);
  AlgebraicGenerator(SignedPoly m, Interval interval) : m_(std::move(m)), interval_(std::move(interval)) {}
  SignedPoly m_;
  Interval interval_;
};

/// Checks, in order: monic of degree >= 2 (NotMonic, TrivialExtension),
/// irreducible (Reducible), a positive real root exists (NoPositiveRoot),
/// 0 < lo < hi with a sign change and a single root in (lo, hi)
/// (IntervalNotIsolating), and m not a positive polynomial
/// (AllPositiveCoefficients).
AlgebraicGenerator validate_generator(const SignedPoly& m, const Interval& interval);

/// Shared handle: elements of one extension point at the same generator.
using GeneratorRef = std::shared_ptr<const AlgebraicGenerator>;
GeneratorRef make_generator(const SignedPoly& m, const Interval& interval);

int ext_dimension(const AlgebraicGenerator& g);

class ExtElem {
 public:
  /// Coefficients w.r.t. 1, d, d^2, ...; longer vectors are reduced mod m.
  ExtElem(GeneratorRef gen, const std::vector<Rational>& coeffs);
  ExtElem(GeneratorRef gen, const SignedPoly& p);
  static ExtElem constant(GeneratorRef gen, Rational c);
  static ExtElem root(GeneratorRef gen);

  const GeneratorRef& generator() const noexcept { return gen_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  SignedPoly lift() const { return SignedPoly::from_coeffs(coeffs_); }
  bool is_zero() const;
  /// All coefficients of degree >= 1 vanish.
  bool is_rational() const;
  /// All coefficients >= 0 and not all zero.
  bool in_cone() const;

  friend bool operator==(const ExtElem& a, const ExtElem& b);

 private:
  GeneratorRef gen_;
  std::vector<Rational> coeffs_;
};

ExtElem ext_add(const ExtElem& a, const ExtElem& b);
ExtElem ext_sub(const ExtElem& a, const ExtElem& b);
ExtElem ext_mul(const ExtElem& a, const ExtElem& b);
/// ZeroElement for 0.
ExtElem ext_inverse(const ExtElem& e);
ExtElem ext_pow(const ExtElem& e, unsigned long k);

/// Interval containing the real value of e, from an isolating interval of
/// the root of width at most `width`.
Interval enclosure(const ExtElem& e, const Rational& width);
/// Sign of the real number represented by e.
int sign_at_root(const ExtElem& e);

/// Two ways of asking whether e lies in the positive part: the coefficient
/// test (in_cone) and the sign of its real value. They agree for binomial
/// moduli x^n - c on cone elements; in general only one direction holds,
/// so both are reported.
struct ConeReport {
  bool coefficient_test = false;
  bool positive_value = false;
  bool disagree() const { return coefficient_test != positive_value; }
};
ConeReport cone_report(const ExtElem& e);

/// Monic minimal polynomial of e over Q.
SignedPoly minimal_polynomial(const ExtElem& e);

/// m divides a - b.
bool kernel_contains(const PosPoly& a, const PosPoly& b, const AlgebraicGenerator& g);

class PosRationalFunction {
 public:
  PosRationalFunction(PosPoly num, PosPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  explicit PosRationalFunction(PosPoly p) : num_(std::move(p)), den_(PosPoly::constant(1)) {}

  const PosPoly& num() const noexcept { return num_; }
  const PosPoly& den() const noexcept { return den_; }

  friend PosRationalFunction operator+(const PosRationalFunction& a, const PosRationalFunction& b);
  friend PosRationalFunction operator*(const PosRationalFunction& a, const PosRationalFunction& b);
  friend PosRationalFunction operator/(const PosRationalFunction& a, const PosRationalFunction& b);

  /// The quotient as a reduced pair (common factor removed, monic denominator).
  std::pair<SignedPoly, SignedPoly> reduced() const;

 private:
  PosPoly num_, den_;
};

/// num1 * den2 = num2 * den1.
bool ratfunc_eq(const PosRationalFunction& a, const PosRationalFunction& b);
std::string to_string(const PosRationalFunction& r, std::string_view var = "x");

/// (m+ g1 + m- g2 + h (g1 + g2)) / (m+ g2 + m- g1 + h (g1 + g2)); absent
/// g2 or h drop their terms. Numerator minus denominator is m (g1 - g2).
PosRationalFunction kernel_sample(const PosPoly& g1, const std::optional<PosPoly>& g2,
                                  const std::optional<PosPoly>& h, const AlgebraicGenerator& gen);

/// True when a/b maps to 1 under x -> d, i.e. kernel_contains(num, den).
bool in_kernel(const PosRationalFunction& r, const AlgebraicGenerator& gen);

std::string to_string(const ExtElem& e);

}  // namespace layered
