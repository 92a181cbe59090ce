#pragma once

// Finitely generated bipotent extensions D = H[a_1..a_n] of a bipotent
// semifield H whose value group is a ValueLattice.
//
// An element of the extension group is a Laurent monomial prod a_i^{k_i},
// recorded by its exponent vector k in Z^n. The exponent lattice
// Lambda = {k : sum k_i a_i lies in the base} is the kernel of Z^n -> D*/H*,
// and Smith normal form of a basis of Lambda splits D*/H* into a free part
// and a torsion part.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "layered/int_matrix.hpp"
#include "layered/tropical.hpp"
#include "layered/value_expr.hpp"

namespace layered {

/// A generator is a formal value: numeric ("num") generators carry a
/// rational, symbolic ("sym") ones a name whose relations are declared.
using Generator = ValueExpr;

/// sum_i exps[i] * a_i = beta, with beta in the base.
struct Relation {
  IntVector exps;
  Rational beta;

  friend bool operator==(const Relation&, const Relation&) = default;
};

class BipotentPresentation {
 public:
  BipotentPresentation() = default;
  BipotentPresentation(ValueLattice base, std::vector<Generator> generators, std::vector<Relation> relations = {});

  const ValueLattice& base() const noexcept { return base_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t size() const noexcept { return generators_.size(); }

  /// The same presentation with `g` appended as generator n.
  BipotentPresentation with_generator(const Generator& g) const;
  /// Generators reordered by `order` (a permutation of 0..n-1); relations follow.
  BipotentPresentation permuted(std::span<const std::size_t> order) const;

  /// Formal value of the monomial with the given exponents.
  ValueExpr monomial_value(std::span<const Integer> exps) const;

  friend bool operator==(const BipotentPresentation& a, const BipotentPresentation& b) {
    return a.base_.generators() == b.base_.generators() && a.generators_ == b.generators_ &&
           a.relations_ == b.relations_;
  }

 private:
  ValueLattice base_;
  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
};

/// A rank or degree in N u {infinity}.
class Degree {
 public:
  Degree(Integer v) : value_(std::move(v)) {}
  Degree(long v) : value_(Integer(v)) {}
  static Degree infinite() { return Degree(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  const Integer& value() const;

  friend Degree operator*(const Degree& a, const Degree& b);
  friend bool operator==(const Degree& a, const Degree& b) = default;

 private:
  Degree() = default;
  std::optional<Integer> value_;
};

/// "6" or "inf".
std::string to_string(const Degree& d);

/// A lattice in Z^n together with the base value attained by each basis row.
class ExponentLattice {
 public:
  ExponentLattice(std::size_t dimension) : basis_(0, dimension) {}
  /// Rows need not be independent; the result is Hermite-reduced.
  ExponentLattice(const IntMatrix& rows, const std::vector<Rational>& values);

  const IntMatrix& basis() const noexcept { return basis_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  std::size_t dimension() const noexcept { return basis_.cols(); }
  std::size_t rank() const noexcept { return basis_.rows(); }
  bool is_trivial() const noexcept { return basis_.rows() == 0; }

  bool contains(std::span<const Integer> k) const;
  /// beta with sum k_i a_i = beta, when k lies in the lattice.
  std::optional<Rational> base_value(std::span<const Integer> k) const;
  /// Sub-lattice of vectors supported on `coords`.
  ExponentLattice restrict_to(std::span<const std::size_t> coords) const;
  /// g >= 0 with {k_coord : k in lattice} = gZ.
  Integer projection(std::size_t coord) const;

 private:
  IntMatrix basis_;
  std::vector<Rational> values_;
};

/// Z^n / Lambda in Smith coordinates.
class QuotientGroup {
 public:
  explicit QuotientGroup(const ExponentLattice& lattice);

  const SmithDecomposition& smith() const noexcept { return smith_; }
  std::size_t free_rank() const noexcept { return smith_.free_rank; }
  /// Canonical coordinates of the class of e (torsion parts reduced).
  IntVector class_of(std::span<const Integer> e) const;
  /// Order of the class of e.
  Degree order(std::span<const Integer> e) const;

 private:
  std::size_t dimension_;
  SmithDecomposition smith_;
};

struct TorsionMonomial {
  IntVector exps;
  Integer order;
  /// Coset representative with the least non-negative value, when the
  /// monomial has a numeric value.
  std::optional<Rational> representative;
};

/// a_i = beta + sum_j free_coeffs[j] b_j + sum_j torsion_coeffs[j] c_j.
struct GeneratorExpression {
  Rational beta;
  IntVector free_coeffs;
  IntVector torsion_coeffs;
};

struct ExtDecomposition {
  std::size_t free_rank = 0;
  std::vector<IntVector> free_monomials;
  std::vector<TorsionMonomial> torsion;
  std::vector<GeneratorExpression> generators;
  SmithDecomposition smith;

  std::vector<Integer> torsion_orders() const;
  /// [D : H]: product of the torsion orders, infinite if free_rank > 0.
  Degree rank() const;
};

struct DependenceWitness {
  Integer k;       // minimal positive power
  IntVector exps;  // over all generators of the presentation, zero off S
  Rational beta;   // k*b = beta + sum exps[i] * a_i

  friend bool operator==(const DependenceWitness&, const DependenceWitness&) = default;
};

/// Throws InconsistentRelations when the declared relations contradict the
/// numeric generator values.
ExponentLattice exponent_lattice(const BipotentPresentation& p);

ExtDecomposition decompose_extension(const BipotentPresentation& p);

/// True iff the lattice restricted to the subset's coordinates is non-trivial.
bool is_divisibly_dependent(const BipotentPresentation& p, std::span<const std::size_t> subset);

/// Minimal k >= 1 with k*b = beta + sum_{i in S} k_i a_i, if any.
std::optional<DependenceWitness> divisible_dependence_witness(const BipotentPresentation& p, const ValueExpr& b,
                                                              std::span<const std::size_t> subset);

/// Minimal k with k * (monomial) in the base.
Degree torsion_degree(const BipotentPresentation& p, std::span<const Integer> exps);
Degree torsion_degree(const BipotentPresentation& p, const ValueExpr& elem);

/// v lies in the value group of D.
bool contains_value(const BipotentPresentation& p, const ValueExpr& v);

/// [D : H].
Degree extension_rank(const BipotentPresentation& p);
/// [D : K] for K = H[sub...]; each element of `sub` must lie in D.
Degree extension_rank(const BipotentPresentation& p, std::span<const Generator> sub);
Degree extension_rank(const BipotentPresentation& p, const BipotentPresentation& sub);

/// H[a_1..a_n] with natural exponents is a semifield iff every a_i is torsion.
bool is_bipotent_semifield(const BipotentPresentation& p);

bool torsion_subdomain_contains(const BipotentPresentation& p, const ValueExpr& elem);

/// x = alpha * y for some alpha in H, i.e. x - y lies in the base.
bool linearly_dependent_pair(const BipotentPresentation& p, const ValueExpr& x, const ValueExpr& y);

/// Whether the class of `target` is beta * prod a_i^{j_i} with 0 <= j_i <= bound,
/// i.e. a member of the monoid-exponent extension H[a_1..a_n] (searched to the bound).
bool monoid_contains(const BipotentPresentation& p, std::span<const Integer> target, unsigned bound);

}  // namespace layered
