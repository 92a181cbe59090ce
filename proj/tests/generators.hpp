#pragma once

// Random inputs shared by the property tests and the acceptance suite.

#include <string>
#include <vector>

#include "layered/bipotent.hpp"
#include "layered/cancellative.hpp"
#include "layered/tropical.hpp"
#include "layered/uniform.hpp"
#include "oracles.hpp"

namespace gen {

using namespace layered;

inline LayeredElem layered(oracle::Rng& rng, bool allow_zero = true) {
  if (allow_zero && rng.uniform(0, 9) == 0) return LayeredElem::zero();
  // Few distinct values so that ties (layer sums) come up often.
  return LayeredElem(Layer(rng.positive_rational(6, 4)), Rational(rng.uniform(-3, 3), rng.uniform(1, 2)));
}

/// Numeric generators over Z with denominators <= max_den.
inline BipotentPresentation numeric_presentation(oracle::Rng& rng, std::size_t n, long max_den) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(ValueExpr(rng.rational(2 * max_den, max_den)));
  return BipotentPresentation(ValueLattice::integers(), gens);
}

/// A mix of numeric generators and symbols; some symbols get one declared
/// relation k*s + (other exponents) = beta in which s appears only there, so
/// the relations never contradict each other.
inline BipotentPresentation mixed_presentation(oracle::Rng& rng, std::size_t n) {
  std::vector<Generator> gens;
  std::vector<std::size_t> symbolic;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.coin()) {
      gens.push_back(ValueExpr(rng.rational(12, 8)));
    } else {
      gens.push_back(ValueExpr::symbol("s" + std::to_string(i)));
      symbolic.push_back(i);
    }
  }
  std::vector<Relation> rels;
  for (std::size_t s : symbolic) {
    if (rng.coin()) continue;
    Relation r{IntVector(n, Integer(0)), Rational(rng.uniform(-3, 3))};
    r.exps[s] = rng.uniform(1, 4) * (rng.coin() ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i)
      if (gens[i].is_numeric() && rng.uniform(0, 2) == 0) r.exps[i] = rng.uniform(-3, 3);
    rels.push_back(std::move(r));
  }
  return BipotentPresentation(ValueLattice::integers(), gens, rels);
}

inline ExtElem ext_elem(oracle::Rng& rng, const GeneratorRef& g, bool cone = false) {
  std::vector<Rational> c;
  for (int k = 0; k < g->degree(); ++k)
    c.push_back(cone ? Rational(rng.uniform(0, 6), rng.uniform(1, 4)) : rng.rational(6, 4));
  if (cone && c[0] == 0) c[0] = 1;
  return ExtElem(g, c);
}

}  // namespace gen
