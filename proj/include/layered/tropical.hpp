#pragma once

// Exact arithmetic for the concrete uniform layered model Q>0 (.) (Q u {-inf}).
//
// Values live in the max-plus semifield written additively: tropical
// "multiplication" is rational addition and the k-th tropical power of a
// value v is k*v. Layers are positive rationals under ordinary + and *.
// A layered element is either Zero or a pair [layer]value.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "layered/rational.hpp"

namespace layered {

/// An element of Q u {-inf}. Bottom is the additive zero of max-plus.
class TropValue {
 public:
  TropValue() = default;  // Bottom
  TropValue(Rational v) : value_(std::move(v)) { value_->canonicalize(); }
  TropValue(long v) : value_(Rational(v)) {}

  static TropValue bottom() { return TropValue(); }

  bool is_bottom() const noexcept { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const TropValue& a, const TropValue& b);
  friend std::strong_ordering operator<=>(const TropValue& a, const TropValue& b);

 private:
  std::optional<Rational> value_;
};

/// max
TropValue trop_add(const TropValue& x, const TropValue& y);
/// rational addition, Bottom absorbing
TropValue trop_mul(const TropValue& x, const TropValue& y);

std::string to_string(const TropValue& v);

/// A strictly positive rational.
class Layer {
 public:
  explicit Layer(Rational v);
  Layer(long v) : Layer(Rational(v)) {}

  const Rational& value() const noexcept { return value_; }

  friend Layer operator+(const Layer& a, const Layer& b) { return Layer(Rational(a.value_ + b.value_)); }
  friend Layer operator*(const Layer& a, const Layer& b) { return Layer(Rational(a.value_ * b.value_)); }
  Layer inverse() const { return Layer(Rational(1 / value_)); }

  friend bool operator==(const Layer& a, const Layer& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Layer& a, const Layer& b);

 private:
  Rational value_;
};

/// Zero, or [layer]value with a finite value.
class LayeredElem {
 public:
  LayeredElem() = default;  // Zero
  LayeredElem(Layer layer, Rational value) : pair_(Pair{std::move(layer), std::move(value)}) { pair_->value.canonicalize(); }

  static LayeredElem zero() { return LayeredElem(); }
  static LayeredElem one() { return LayeredElem(Layer(1), Rational(0)); }

  bool is_zero() const noexcept { return !pair_.has_value(); }

  /// Throws ZeroHasNoLayer on Zero.
  const Layer& layer() const;
  /// Bottom on Zero.
  TropValue value() const;

  friend bool operator==(const LayeredElem& a, const LayeredElem& b);

 private:
  struct Pair {
    Layer layer;
    Rational value;
  };
  std::optional<Pair> pair_;
};

LayeredElem trop_add(const LayeredElem& x, const LayeredElem& y);
LayeredElem trop_mul(const LayeredElem& x, const LayeredElem& y);
inline LayeredElem operator+(const LayeredElem& x, const LayeredElem& y) { return trop_add(x, y); }
inline LayeredElem operator*(const LayeredElem& x, const LayeredElem& y) { return trop_mul(x, y); }

/// x^n for n >= 0: layer^n, n*value.
LayeredElem power(const LayeredElem& x, unsigned long n);

/// The sorting map s. Throws ZeroHasNoLayer on Zero.
Layer sort_map(const LayeredElem& x);
/// The ghost (value) map nu. Bottom on Zero.
TropValue ghost_map(const LayeredElem& x);
/// Inverse of (sort_map, ghost_map) on non-Zero elements. Throws BottomValue.
LayeredElem rebuild(const Layer& l, const TropValue& v);

/// "[l]v" or "Zero".
std::string to_string(const LayeredElem& x);
/// Parses the rendering produced by to_string.
LayeredElem parse_layered(std::string_view text);

/// A finitely generated subgroup of (Q, +). Such a subgroup is cyclic; the
/// non-negative generator is kept alongside the declared generators.
class ValueLattice {
 public:
  ValueLattice() = default;  // the trivial group {0}
  explicit ValueLattice(std::vector<Rational> generators);

  static ValueLattice integers() { return ValueLattice({Rational(1)}); }

  const std::vector<Rational>& generators() const noexcept { return generators_; }
  /// The unique non-negative generator delta with <g_1..g_r> = delta*Z.
  const Rational& unit() const noexcept { return unit_; }
  bool is_trivial() const noexcept { return unit_ == 0; }

  bool contains(const Rational& q) const;

  /// Same subgroup of Q.
  friend bool operator==(const ValueLattice& a, const ValueLattice& b) { return a.unit_ == b.unit_; }

 private:
  std::vector<Rational> generators_;
  Rational unit_{0};
};

/// Membership q in <g_1..g_r>, decided by clearing denominators.
bool lattice_contains(const ValueLattice& lattice, const Rational& q);

}  // namespace layered
