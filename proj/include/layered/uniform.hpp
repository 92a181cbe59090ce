#pragma once

// Uniform layered extensions L' (.) G' of the base Q>0 (.) G(H).
//
// A descriptor pairs a sort part (the layers: Q>0, Q>0[d] for an algebraic
// d, or Q>0[t^k] / Q>0(t^k) for a free symbol t) with a value part (a
// bipotent presentation). A scalar a of the extension is its layer s(a)
// together with its value nu(a).

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "layered/bipotent.hpp"
#include "layered/cancellative.hpp"
#include "layered/tropical.hpp"

namespace layered {

/// A positive rational function of a free symbol.
struct FreeLayer {
  std::string symbol;
  PosRationalFunction f;
};

/// A layer: a positive rational, an element of Q(d), or a function of t.
using SortElem = std::variant<Rational, ExtElem, FreeLayer>;

bool operator==(const FreeLayer& a, const FreeLayer& b);
SortElem sort_add(const SortElem& a, const SortElem& b);
SortElem sort_mul(const SortElem& a, const SortElem& b);
SortElem sort_pow(const SortElem& a, unsigned long k);
/// Strictly positive as a real number (free layers are positive by type).
bool is_positive(const SortElem& a);
/// Equality after promoting a rational to the other operand's kind.
bool sort_equal(const SortElem& a, const SortElem& b);
std::string to_string(const SortElem& a);

struct BaseSort {
  friend bool operator==(const BaseSort&, const BaseSort&) = default;
};
struct AlgebraicSort {
  GeneratorRef gen;
  friend bool operator==(const AlgebraicSort& a, const AlgebraicSort& b) { return *a.gen == *b.gen; }
};
/// Q>0[t^exponent], or Q>0(t^exponent) when fractions are included.
struct FreeSort {
  std::string symbol;
  long exponent = 1;
  bool fractions = false;
  friend bool operator==(const FreeSort&, const FreeSort&) = default;
};
using SortPart = std::variant<BaseSort, AlgebraicSort, FreeSort>;
std::string to_string(const SortPart& s);

struct UniformDescriptor {
  SortPart sort;
  BipotentPresentation value;

  /// Q>0 (.) base.
  static UniformDescriptor base(ValueLattice lattice);
  /// Structural equality: same sort part, same presentation.
  friend bool operator==(const UniformDescriptor&, const UniformDescriptor&) = default;
};

/// Same sort part and the same value group.
bool equivalent(const UniformDescriptor& a, const UniformDescriptor& b);
std::string to_string(const UniformDescriptor& d);

/// Layer in the sort part of the descriptor. Throws UnsupportedTower when
/// the question needs two independent generators.
bool layer_in_sort(const SortPart& sort, const SortElem& layer);

/// a = s(a) (.) nu(a).
struct ExtScalar {
  /// Throws NonPositiveLayer.
  ExtScalar(SortElem layer, ValueExpr value);
  SortElem layer;
  ValueExpr value;
};

struct LayeredTerm {
  LayeredElem coeff;
  unsigned exp;
};

/// sum_i alpha_i x^i with non-Zero coefficients and distinct exponents,
/// stored by increasing exponent.
class LayeredPoly {
 public:
  /// Throws InvalidPolynomial for an empty list, a Zero coefficient or a
  /// repeated exponent.
  explicit LayeredPoly(std::vector<LayeredTerm> terms);
  const std::vector<LayeredTerm>& terms() const noexcept { return terms_; }

 private:
  std::vector<LayeredTerm> terms_;
};

/// Positions (into terms()) of the terms attaining max nu(alpha_i) + i*nu(a).
/// Throws NonNumericValue unless nu(a) is a number.
std::vector<std::size_t> essential_indices(const LayeredPoly& f, const ExtScalar& a);

struct Evaluation {
  SortElem layer;
  Rational value;
};
/// Value: the maximal term value. Layer: sum of s(alpha_j) s(a)^j over the
/// essential terms.
Evaluation eval_layered_poly(const LayeredPoly& f, const ExtScalar& a);

/// H[a] when nu(a) already lies in G(H): only the layers grow.
/// Throws ValueNotInBase.
UniformDescriptor pure_layer_ext(const UniformDescriptor& h, const ExtScalar& a);
/// H[a] when s(a) already lies in L_H: only the values grow.
/// Throws LayerNotInBase.
UniformDescriptor pure_value_ext(const UniformDescriptor& h, const ExtScalar& a);
/// L_H[s(a)] (.) G(H[nu(a)]), the smallest uniform extension containing a.
UniformDescriptor uniform_closure(const UniformDescriptor& h, const ExtScalar& a);

/// {s(e) : nu(e) = alpha}, without repeats.
std::vector<SortElem> layer_fibre_sample(const std::vector<ExtScalar>& elems, const ValueExpr& alpha);

/// Whether the sampled fibres over alpha and beta agree. With `close` the
/// sample is first closed under translation by the values beta - alpha and
/// alpha - beta, which moves a fibre onto the other without changing layers.
bool fibres_coincide(const std::vector<ExtScalar>& sample, const ValueExpr& alpha, const ValueExpr& beta,
                     bool close);

struct LayersetReport {
  bool semiring = false;
  /// Exponents (i, j) of two monomials of a whose layers cannot be added:
  /// their values never meet.
  std::optional<std::pair<unsigned, unsigned>> witness;
  /// Pairs 0 <= i < j <= bound with (j - i) nu(a) in G(H), out of all pairs.
  std::size_t realizable_pairs = 0;
  std::size_t checked_pairs = 0;
};
/// The layers of H[a] form a semiring iff nu(a) lies in G(H); the bounded
/// scan records which powers of a can be tied.
LayersetReport is_layerset_semiring(const UniformDescriptor& h, const ExtScalar& a, unsigned bound);

/// Both the value part and the sort part are semifields.
bool is_uniform_semifield(const UniformDescriptor& h);

}  // namespace layered
