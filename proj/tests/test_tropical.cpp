#include "doctest.h"
#include "layered/error.hpp"
#include "layered/tropical.hpp"
#include "layered/value_expr.hpp"

using namespace layered;

namespace {
LayeredElem L(long l, long v) { return LayeredElem(Layer(l), Rational(v)); }
}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(floor_mod(Integer(-7), Integer(3)) == 2);
  CHECK(floor(Rational(-1, 2)) == -1);
}

TEST_CASE("layered addition") {
  CHECK(L(2, 5) + L(1, 3) == L(2, 5));
  CHECK(L(2, 5) + L(3, 5) == L(5, 5));
  CHECK(LayeredElem::zero() + L(1, 7) == L(1, 7));
}

TEST_CASE("layered multiplication") {
  CHECK(L(2, 5) * L(3, 1) == L(6, 6));
  CHECK(L(1, 0) * L(4, -2) == L(4, -2));
  CHECK(LayeredElem::zero() * L(4, -2) == LayeredElem::zero());
  CHECK(power(L(2, 3), 3) == L(8, 9));
  CHECK(power(L(2, 3), 0) == LayeredElem::one());
}

TEST_CASE("sort and ghost maps") {
  CHECK(sort_map(L(2, 5)) == Layer(2));
  CHECK(sort_map(L(3, 5) * L(2, 1)) == Layer(6));
  CHECK_THROWS_AS(sort_map(LayeredElem::zero()), Error);
  CHECK(ghost_map(L(2, 5)) == TropValue(5));
  CHECK(ghost_map(L(2, 5) + L(3, 5)) == TropValue(5));
  CHECK(ghost_map(LayeredElem::zero()).is_bottom());
  LayeredElem x(Layer(Rational(7, 2)), Rational(-3));
  CHECK(rebuild(sort_map(x), ghost_map(x)) == x);
  CHECK_THROWS_AS(rebuild(Layer(1), TropValue::bottom()), Error);
  CHECK_THROWS_AS(Layer(Rational(0)), Error);
}

TEST_CASE("tropical values") {
  CHECK(TropValue::bottom() < TropValue(-1000));
  CHECK(trop_add(TropValue(2), TropValue::bottom()) == TropValue(2));
  CHECK(trop_mul(TropValue(2), TropValue::bottom()).is_bottom());
  CHECK(trop_mul(TropValue(2), TropValue(Rational(1, 2))) == TropValue(Rational(5, 2)));
}

TEST_CASE("text form") {
  CHECK(to_string(L(2, 5)) == "[2]5");
  CHECK(to_string(LayeredElem::zero()) == "Zero");
  CHECK(to_string(LayeredElem(Layer(Rational(1, 3)), Rational(-5, 2))) == "[1/3]-5/2");
  for (const char* s : {"[2]5", "Zero", "[1/3]-5/2", "[7]0"}) CHECK(to_string(parse_layered(s)) == s);
  CHECK_THROWS_AS(parse_layered("[0]1"), Error);
  CHECK_THROWS_AS(parse_layered("[1]"), Error);
  CHECK_THROWS_AS(parse_layered("2]5"), Error);
}

TEST_CASE("value lattices") {
  CHECK(lattice_contains(ValueLattice::integers(), Rational(5)));
  CHECK(!lattice_contains(ValueLattice::integers(), Rational(1, 2)));
  ValueLattice l({Rational(1, 2), Rational(1, 3)});
  CHECK(lattice_contains(l, Rational(1, 6)));
  CHECK(l.unit() == Rational(1, 6));
  CHECK(ValueLattice().contains(Rational(0)));
  CHECK(!ValueLattice().contains(Rational(1)));
  CHECK(ValueLattice({Rational(4), Rational(6)}) == ValueLattice({Rational(-2)}));
}

TEST_CASE("value expressions") {
  ValueExpr v = parse_value_expr("1/2 + 2*g - h");
  CHECK(v.offset() == Rational(1, 2));
  CHECK(v.symbols().at("g") == 2);
  CHECK(v.symbols().at("h") == -1);
  CHECK(to_string(v) == "1/2 + 2*g - h");
  CHECK(to_string(parse_value_expr("g - g")) == "0");
  CHECK(to_string(Integer(3) * parse_value_expr("-g + 1/3")) == "1 - 3*g");
  CHECK(parse_value_expr(" -1/6 ") == ValueExpr(Rational(-1, 6)));
  CHECK_THROWS_AS(parse_value_expr("1/2 +"), Error);
  CHECK_THROWS_AS(parse_value_expr("2*"), Error);
  CHECK_THROWS_AS(parse_value_expr(""), Error);
}
