#include "layered/tropical.hpp"

#include "layered/error.hpp"

namespace layered {

const Rational& TropValue::value() const {
  if (!value_) throw Error(Errc::BottomValue, "Bottom has no finite value");
  return *value_;
}

bool operator==(const TropValue& a, const TropValue& b) {
  if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const TropValue& a, const TropValue& b) {
  if (a.is_bottom() || b.is_bottom()) return !a.is_bottom() <=> !b.is_bottom();
  int c = cmp(*a.value_, *b.value_);
  return c <=> 0;
}

TropValue trop_add(const TropValue& x, const TropValue& y) { return x < y ? y : x; }

TropValue trop_mul(const TropValue& x, const TropValue& y) {
  if (x.is_bottom() || y.is_bottom()) return TropValue::bottom();
  return TropValue(Rational(x.value() + y.value()));
}

std::string to_string(const TropValue& v) { return v.is_bottom() ? "-inf" : to_string(v.value()); }

Layer::Layer(Rational v) : value_(std::move(v)) {
  value_.canonicalize();
  if (value_ <= 0) throw Error(Errc::NonPositiveLayer, "layer must be positive, got " + to_string(value_));
}

std::strong_ordering operator<=>(const Layer& a, const Layer& b) { return cmp(a.value_, b.value_) <=> 0; }

const Layer& LayeredElem::layer() const {
  if (!pair_) throw Error(Errc::ZeroHasNoLayer, "Zero has no layer");
  return pair_->layer;
}

TropValue LayeredElem::value() const { return pair_ ? TropValue(pair_->value) : TropValue::bottom(); }

bool operator==(const LayeredElem& a, const LayeredElem& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.pair_->layer == b.pair_->layer && a.pair_->value == b.pair_->value;
}

LayeredElem trop_add(const LayeredElem& x, const LayeredElem& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const Rational a = x.value().value();
  const Rational b = y.value().value();
  if (a > b) return x;
  if (a < b) return y;
  return LayeredElem(x.layer() + y.layer(), a);
}

LayeredElem trop_mul(const LayeredElem& x, const LayeredElem& y) {
  if (x.is_zero() || y.is_zero()) return LayeredElem::zero();
  return LayeredElem(x.layer() * y.layer(), Rational(x.value().value() + y.value().value()));
}

LayeredElem power(const LayeredElem& x, unsigned long n) {
  if (n == 0) return LayeredElem::one();
  if (x.is_zero()) return x;
  return LayeredElem(Layer(pow(x.layer().value(), n)), Rational(x.value().value() * n));
}

Layer sort_map(const LayeredElem& x) { return x.layer(); }

TropValue ghost_map(const LayeredElem& x) { return x.value(); }

LayeredElem rebuild(const Layer& l, const TropValue& v) {
  if (v.is_bottom()) throw Error(Errc::BottomValue, "cannot rebuild a layered element with Bottom value");
  return LayeredElem(l, v.value());
}

std::string to_string(const LayeredElem& x) {
  if (x.is_zero()) return "Zero";
  return "[" + to_string(x.layer().value()) + "]" + to_string(x.value().value());
}

LayeredElem parse_layered(std::string_view text) {
  if (text == "Zero") return LayeredElem::zero();
  auto close = text.find(']');
  if (text.empty() || text.front() != '[' || close == std::string_view::npos)
    throw Error(Errc::ParseError, "expected \"[l]v\" or \"Zero\", got '" + std::string(text) + "'");
  return LayeredElem(Layer(parse_rational(text.substr(1, close - 1))), parse_rational(text.substr(close + 1)));
}

ValueLattice::ValueLattice(std::vector<Rational> generators) : generators_(std::move(generators)) {
  // <p_1/q_1, ..., p_r/q_r> = (g / L) Z with L = lcm(q_i), g = gcd(p_i L / q_i).
  Integer den_lcm = 1;
  for (const auto& g : generators_) den_lcm = lcm(den_lcm, g.get_den());
  Integer num_gcd = 0;
  for (const auto& g : generators_) {
    Integer scaled = g.get_num() * (den_lcm / g.get_den());
    num_gcd = gcd(num_gcd, scaled);
  }
  unit_ = make_rational(num_gcd, den_lcm);
}

bool ValueLattice::contains(const Rational& q) const {
  if (unit_ == 0) return q == 0;
  Rational ratio = q / unit_;
  return ratio.get_den() == 1;
}

bool lattice_contains(const ValueLattice& lattice, const Rational& q) { return lattice.contains(q); }

}  // namespace layered
