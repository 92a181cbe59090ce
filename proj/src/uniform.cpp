#include "layered/uniform.hpp"

#include <algorithm>
#include <numeric>

#include "layered/error.hpp"

namespace layered {

bool operator==(const FreeLayer& a, const FreeLayer& b) { return a.symbol == b.symbol && ratfunc_eq(a.f, b.f); }

namespace {

PosRationalFunction constant_function(const Rational& c) { return PosRationalFunction(PosPoly::constant(c)); }

[[noreturn]] void unsupported(const std::string& what) { throw Error(Errc::UnsupportedTower, what); }

// Applies op to a and b after promoting a rational to the kind of the other.
template <class ExtOp, class FreeOp, class RatOp>
SortElem combine(const SortElem& a, const SortElem& b, ExtOp ext_op, FreeOp free_op, RatOp rat_op) {
  return std::visit(
      [&](const auto& x, const auto& y) -> SortElem {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Rational> && std::is_same_v<Y, Rational>) {
          return rat_op(x, y);
        } else if constexpr (std::is_same_v<X, ExtElem> && std::is_same_v<Y, ExtElem>) {
          return ext_op(x, y);
        } else if constexpr (std::is_same_v<X, ExtElem> && std::is_same_v<Y, Rational>) {
          return ext_op(x, ExtElem::constant(x.generator(), y));
        } else if constexpr (std::is_same_v<X, Rational> && std::is_same_v<Y, ExtElem>) {
          return ext_op(ExtElem::constant(y.generator(), x), y);
        } else if constexpr (std::is_same_v<X, FreeLayer> && std::is_same_v<Y, FreeLayer>) {
          if (x.symbol != y.symbol) unsupported("layers in two free symbols " + x.symbol + " and " + y.symbol);
          return FreeLayer{x.symbol, free_op(x.f, y.f)};
        } else if constexpr (std::is_same_v<X, FreeLayer> && std::is_same_v<Y, Rational>) {
          return FreeLayer{x.symbol, free_op(x.f, constant_function(y))};
        } else if constexpr (std::is_same_v<X, Rational> && std::is_same_v<Y, FreeLayer>) {
          return FreeLayer{y.symbol, free_op(constant_function(x), y.f)};
        } else {
          unsupported("an algebraic layer combined with a free layer");
        }
      },
      a, b);
}

}  // namespace

SortElem sort_add(const SortElem& a, const SortElem& b) {
  return combine(
      a, b, [](const ExtElem& x, const ExtElem& y) { return ext_add(x, y); },
      [](const PosRationalFunction& x, const PosRationalFunction& y) { return x + y; },
      [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

SortElem sort_mul(const SortElem& a, const SortElem& b) {
  return combine(
      a, b, [](const ExtElem& x, const ExtElem& y) { return ext_mul(x, y); },
      [](const PosRationalFunction& x, const PosRationalFunction& y) { return x * y; },
      [](const Rational& x, const Rational& y) { return Rational(x * y); });
}

SortElem sort_pow(const SortElem& a, unsigned long k) {
  SortElem result = Rational(1), base = a;
  while (k > 0) {
    if (k & 1) result = sort_mul(result, base);
    k >>= 1;
    if (k > 0) base = sort_mul(base, base);
  }
  return result;
}

bool is_positive(const SortElem& a) {
  if (const auto* q = std::get_if<Rational>(&a)) return *q > 0;
  if (const auto* e = std::get_if<ExtElem>(&a)) return sign_at_root(*e) > 0;
  return true;
}

bool sort_equal(const SortElem& a, const SortElem& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> bool {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          return x == y;
        } else if constexpr (std::is_same_v<X, Rational> && std::is_same_v<Y, ExtElem>) {
          return ExtElem::constant(y.generator(), x) == y;
        } else if constexpr (std::is_same_v<X, ExtElem> && std::is_same_v<Y, Rational>) {
          return ExtElem::constant(x.generator(), y) == x;
        } else if constexpr (std::is_same_v<X, Rational> && std::is_same_v<Y, FreeLayer>) {
          return x > 0 && ratfunc_eq(constant_function(x), y.f);
        } else if constexpr (std::is_same_v<X, FreeLayer> && std::is_same_v<Y, Rational>) {
          return y > 0 && ratfunc_eq(x.f, constant_function(y));
        } else {
          return false;
        }
      },
      a, b);
}

std::string to_string(const SortElem& a) {
  if (const auto* q = std::get_if<Rational>(&a)) return to_string(*q);
  if (const auto* e = std::get_if<ExtElem>(&a)) return to_string(*e);
  const auto& f = std::get<FreeLayer>(a);
  return to_string(f.f, f.symbol);
}

std::string to_string(const SortPart& s) {
  if (std::holds_alternative<BaseSort>(s)) return "Q>0";
  if (const auto* a = std::get_if<AlgebraicSort>(&s)) {
    const auto& iv = a->gen->interval();
    return "Q>0[root of " + to_string(a->gen->minimal_polynomial()) + " in (" + to_string(iv.lo) + ", " +
           to_string(iv.hi) + ")]";
  }
  const auto& f = std::get<FreeSort>(s);
  std::string power = f.exponent == 1 ? f.symbol : f.symbol + "^" + std::to_string(f.exponent);
  return f.fractions ? "Q>0(" + power + ")" : "Q>0[" + power + "]";
}

UniformDescriptor UniformDescriptor::base(ValueLattice lattice) {
  return {BaseSort{}, BipotentPresentation(std::move(lattice), {}, {})};
}

bool equivalent(const UniformDescriptor& a, const UniformDescriptor& b) {
  if (!(a.sort == b.sort) || !(a.value.base() == b.value.base())) return false;
  auto covers = [](const BipotentPresentation& p, const BipotentPresentation& q) {
    return std::all_of(q.generators().begin(), q.generators().end(),
                       [&](const Generator& g) { return contains_value(p, g); });
  };
  return covers(a.value, b.value) && covers(b.value, a.value);
}

std::string to_string(const UniformDescriptor& d) {
  std::string base;
  for (const auto& g : d.value.base().generators()) base += (base.empty() ? "" : ", ") + to_string(g);
  std::string gens;
  for (const auto& g : d.value.generators()) gens += (gens.empty() ? "" : ", ") + to_string(g);
  std::string out = to_string(d.sort) + " (.) <" + base + ">";
  if (!gens.empty()) out += "[" + gens + "]";
  return out;
}

namespace {

// The reduced quotient n/d of a free layer, with d monic.
std::pair<SignedPoly, SignedPoly> reduced(const FreeLayer& f) { return f.f.reduced(); }

bool positive_in_powers(const SignedPoly& p, long k) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return t.second > 0 && t.first % static_cast<unsigned long>(k) == 0; });
}

bool in_powers(const SignedPoly& p, long k) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return t.first % static_cast<unsigned long>(k) == 0; });
}

bool is_monomial(const SignedPoly& p) { return p.terms().size() == 1; }

bool free_layer_in(const FreeSort& s, const FreeLayer& layer) {
  auto [n, d] = reduced(layer);
  if (n.degree() == 0 && d.degree() == 0) return true;
  if (layer.symbol != s.symbol) return false;
  const long k = std::labs(s.exponent);
  // A free layer is positive on t > 0. By Polya's theorem every rational
  // function of u = t^k positive on u > 0 is a quotient of positive
  // polynomials in u, so the field case only asks for powers of t^k.
  // The reduced form of an element of Q(t^k) keeps that support.
  if (s.fractions) return in_powers(n, k) && in_powers(d, k);
  if (!positive_in_powers(n, k) || !positive_in_powers(d, k)) return false;
  if (s.exponent > 0) return d.degree() == 0;
  // Q>0[t^-k]: n / t^{k m} with deg n <= k m.
  return is_monomial(d) && n.degree() <= d.degree();
}

bool ext_layer_in(const SortPart& sort, const ExtElem& e) {
  if (sign_at_root(e) <= 0) return false;
  if (e.is_rational()) return true;
  const auto* alg = std::get_if<AlgebraicSort>(&sort);
  if (!alg) return false;
  if (*e.generator() == *alg->gen) return true;
  SignedPoly p = minimal_polynomial(e);
  const SignedPoly& m = alg->gen->minimal_polynomial();
  if (p == m) {
    // e is a root of m; it is the sort's generator iff it lies in that root's
    // isolating interval. m has no rational roots, so refinement settles it.
    const Interval& iv = alg->gen->interval();
    Rational width = iv.hi - iv.lo;
    while (true) {
      Interval enc = enclosure(e, width);
      if (enc.lo > iv.lo && enc.hi <= iv.hi) return true;
      if (enc.hi <= iv.lo || enc.lo > iv.hi) break;
      width /= 16;
    }
  }
  if (m.degree() % p.degree() != 0) return false;
  unsupported("cannot decide whether " + to_string(e) + " lies in " + to_string(sort));
}

// An isolating interval for the value of e as a root of its minimal polynomial p.
Interval isolate_value(const ExtElem& e, const SignedPoly& p) {
  const Interval& iv = e.generator()->interval();
  Rational width = iv.hi - iv.lo;
  while (true) {
    Interval enc = enclosure(e, width);
    if (enc.lo > 0 && enc.lo < enc.hi && sign(p.eval(enc.lo)) * sign(p.eval(enc.hi)) < 0 &&
        count_real_roots(p, enc.lo, enc.hi) == 1)
      return enc;
    width /= 16;
  }
}

GeneratorRef generator_of(const ExtElem& e) {
  if (e == ExtElem::root(e.generator())) return e.generator();
  SignedPoly p = minimal_polynomial(e);
  // full degree: e generates the same field as the root it is written in
  if (p.degree() == e.generator()->degree()) return e.generator();
  return make_generator(p, isolate_value(e, p));
}

SortPart extend_sort(const SortPart& sort, const SortElem& layer) {
  if (const auto* e = std::get_if<ExtElem>(&layer)) {
    if (!std::holds_alternative<BaseSort>(sort)) unsupported("adjoining " + to_string(*e) + " to " + to_string(sort));
    return AlgebraicSort{generator_of(*e)};
  }
  const auto& f = std::get<FreeLayer>(layer);
  auto [n, d] = reduced(f);
  if (!is_monomial(n) || !is_monomial(d))
    unsupported("free layers are adjoined as monomials c*" + f.symbol + "^k, got " + to_string(layer));
  const long m = static_cast<long>(n.degree()) - static_cast<long>(d.degree());
  if (std::holds_alternative<BaseSort>(sort)) return FreeSort{f.symbol, m, false};
  const auto* fs = std::get_if<FreeSort>(&sort);
  if (!fs || fs->symbol != f.symbol) unsupported("adjoining " + to_string(layer) + " to " + to_string(sort));
  if (fs->fractions) return FreeSort{fs->symbol, std::gcd(fs->exponent, m), true};
  if (fs->exponent % m == 0 && fs->exponent / m > 0) return FreeSort{fs->symbol, m, false};
  unsupported(to_string(sort) + " with " + to_string(layer) + " is not generated by one power");
}

}  // namespace

bool layer_in_sort(const SortPart& sort, const SortElem& layer) {
  if (const auto* q = std::get_if<Rational>(&layer)) return *q > 0;
  if (const auto* e = std::get_if<ExtElem>(&layer)) return ext_layer_in(sort, *e);
  const auto& f = std::get<FreeLayer>(layer);
  if (const auto* fs = std::get_if<FreeSort>(&sort)) return free_layer_in(*fs, f);
  auto [n, d] = reduced(f);
  return n.degree() == 0 && d.degree() == 0;
}

ExtScalar::ExtScalar(SortElem l, ValueExpr v) : layer(std::move(l)), value(std::move(v)) {
  if (!is_positive(layer)) throw Error(Errc::NonPositiveLayer, "layer " + to_string(layer) + " is not positive");
}

LayeredPoly::LayeredPoly(std::vector<LayeredTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(Errc::InvalidPolynomial, "a layered polynomial needs at least one term");
  std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.exp < b.exp; });
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff.is_zero())
      throw Error(Errc::InvalidPolynomial, "coefficient of x^" + std::to_string(terms_[i].exp) + " is Zero");
    if (i > 0 && terms_[i].exp == terms_[i - 1].exp)
      throw Error(Errc::InvalidPolynomial, "exponent " + std::to_string(terms_[i].exp) + " repeats");
  }
}

std::vector<std::size_t> essential_indices(const LayeredPoly& f, const ExtScalar& a) {
  if (!a.value.is_numeric())
    throw Error(Errc::NonNumericValue, "evaluation needs a numeric value, got " + to_string(a.value));
  const Rational& v = a.value.offset();
  std::vector<Rational> values;
  for (const auto& t : f.terms()) values.push_back(t.coeff.value().value() + t.exp * v);
  const Rational best = *std::max_element(values.begin(), values.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == best) out.push_back(i);
  return out;
}

Evaluation eval_layered_poly(const LayeredPoly& f, const ExtScalar& a) {
  auto essential = essential_indices(f, a);
  const auto& first = f.terms()[essential.front()];
  Rational value = first.coeff.value().value() + first.exp * a.value.offset();
  std::optional<SortElem> layer;
  for (std::size_t j : essential) {
    const auto& t = f.terms()[j];
    SortElem term = sort_mul(SortElem(t.coeff.layer().value()), sort_pow(a.layer, t.exp));
    layer = layer ? sort_add(*layer, term) : term;
  }
  return {*layer, value};
}

UniformDescriptor pure_layer_ext(const UniformDescriptor& h, const ExtScalar& a) {
  if (!contains_value(h.value, a.value))
    throw Error(Errc::ValueNotInBase, "value " + to_string(a.value) + " is not in the value group");
  if (layer_in_sort(h.sort, a.layer)) return h;
  return {extend_sort(h.sort, a.layer), h.value};
}

UniformDescriptor pure_value_ext(const UniformDescriptor& h, const ExtScalar& a) {
  if (!layer_in_sort(h.sort, a.layer))
    throw Error(Errc::LayerNotInBase, "layer " + to_string(a.layer) + " is not in " + to_string(h.sort));
  if (contains_value(h.value, a.value)) return h;
  return {h.sort, h.value.with_generator(a.value)};
}

UniformDescriptor uniform_closure(const UniformDescriptor& h, const ExtScalar& a) {
  UniformDescriptor values = pure_value_ext(h, ExtScalar(Rational(1), a.value));
  return pure_layer_ext(values, ExtScalar(a.layer, ValueExpr()));
}

std::vector<SortElem> layer_fibre_sample(const std::vector<ExtScalar>& elems, const ValueExpr& alpha) {
  std::vector<SortElem> out;
  for (const auto& e : elems) {
    if (!(e.value == alpha)) continue;
    bool seen = std::any_of(out.begin(), out.end(), [&](const SortElem& s) { return sort_equal(s, e.layer); });
    if (!seen) out.push_back(e.layer);
  }
  return out;
}

bool fibres_coincide(const std::vector<ExtScalar>& sample, const ValueExpr& alpha, const ValueExpr& beta,
                     bool close) {
  if (alpha == beta) return true;
  std::vector<ExtScalar> s = sample;
  if (close) {
    for (const auto& e : sample) {
      if (e.value == alpha) s.emplace_back(e.layer, beta);
      if (e.value == beta) s.emplace_back(e.layer, alpha);
    }
  }
  auto fa = layer_fibre_sample(s, alpha), fb = layer_fibre_sample(s, beta);
  auto within = [](const std::vector<SortElem>& x, const std::vector<SortElem>& y) {
    return std::all_of(x.begin(), x.end(), [&](const SortElem& a) {
      return std::any_of(y.begin(), y.end(), [&](const SortElem& b) { return sort_equal(a, b); });
    });
  };
  return within(fa, fb) && within(fb, fa);
}

LayersetReport is_layerset_semiring(const UniformDescriptor& h, const ExtScalar& a, unsigned bound) {
  LayersetReport r;
  r.semiring = contains_value(h.value, a.value);
  if (!r.semiring) r.witness = std::pair<unsigned, unsigned>{0, 1};
  // a^i and a^j can be tied by coefficients from H iff (j - i) nu(a) is in G(H).
  std::vector<bool> tied(bound + 1, false);
  ValueExpr multiple;
  for (unsigned d = 1; d <= bound; ++d) {
    multiple += a.value;
    tied[d] = contains_value(h.value, multiple);
  }
  for (unsigned i = 0; i <= bound; ++i)
    for (unsigned j = i + 1; j <= bound; ++j) {
      ++r.checked_pairs;
      if (tied[j - i]) ++r.realizable_pairs;
    }
  return r;
}

bool is_uniform_semifield(const UniformDescriptor& h) {
  if (!is_bipotent_semifield(h.value)) return false;
  if (const auto* f = std::get_if<FreeSort>(&h.sort)) return f->fractions;
  return true;
}

}  // namespace layered
