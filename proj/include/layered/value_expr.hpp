#pragma once

#include <map>
#include <string>
#include <string_view>

#include "layered/rational.hpp"

namespace layered {

/// A formal value r + sum_g k_g * g: a rational offset plus an integer
/// combination of named (symbolic) values. Written additively, so the
/// product of two values is their sum and a k-th power is k times a value.
class ValueExpr {
 public:
  ValueExpr() = default;
  ValueExpr(Rational offset) : offset_(std::move(offset)) { offset_.canonicalize(); }
  ValueExpr(long offset) : offset_(Rational(offset)) {}

  static ValueExpr numeric(Rational r) { return ValueExpr(std::move(r)); }
  static ValueExpr symbol(std::string name, Integer coeff = 1);

  const Rational& offset() const noexcept { return offset_; }
  const std::map<std::string, Integer>& symbols() const noexcept { return symbols_; }
  bool is_numeric() const noexcept { return symbols_.empty(); }

  ValueExpr& operator+=(const ValueExpr& o);
  ValueExpr& operator-=(const ValueExpr& o);
  friend ValueExpr operator+(ValueExpr a, const ValueExpr& b) { return a += b; }
  friend ValueExpr operator-(ValueExpr a, const ValueExpr& b) { return a -= b; }
  friend ValueExpr operator*(const Integer& k, const ValueExpr& v);
  ValueExpr operator-() const { return Integer(-1) * *this; }

  friend bool operator==(const ValueExpr& a, const ValueExpr& b) = default;

 private:
  Rational offset_{0};
  std::map<std::string, Integer> symbols_;  // no zero coefficients
};

/// "1/2", "g", "1/2 + 2*g - h".
std::string to_string(const ValueExpr& v);
ValueExpr parse_value_expr(std::string_view text);

}  // namespace layered
