#include "layered/bipotent.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "layered/error.hpp"

namespace layered {

BipotentPresentation::BipotentPresentation(ValueLattice base, std::vector<Generator> generators,
                                           std::vector<Relation> relations)
    : base_(std::move(base)), generators_(std::move(generators)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    if (r.exps.size() != generators_.size())
      throw Error(Errc::InvalidPresentation, "relation has " + std::to_string(r.exps.size()) +
                                                 " exponents for " + std::to_string(generators_.size()) +
                                                 " generators");
    if (!base_.contains(r.beta))
      throw Error(Errc::InvalidPresentation, "relation value " + to_string(r.beta) + " is not in the base");
  }
}

BipotentPresentation BipotentPresentation::with_generator(const Generator& g) const {
  BipotentPresentation out = *this;
  out.generators_.push_back(g);
  for (auto& r : out.relations_) r.exps.emplace_back(0);
  return out;
}

BipotentPresentation BipotentPresentation::permuted(std::span<const std::size_t> order) const {
  if (order.size() != size()) throw Error(Errc::DimensionMismatch, "permutation has the wrong length");
  std::vector<Generator> gens;
  for (std::size_t i : order) gens.push_back(generators_.at(i));
  std::vector<Relation> rels;
  for (const auto& r : relations_) {
    Relation nr{IntVector(), r.beta};
    for (std::size_t i : order) nr.exps.push_back(r.exps[i]);
    rels.push_back(std::move(nr));
  }
  return BipotentPresentation(base_, std::move(gens), std::move(rels));
}

ValueExpr BipotentPresentation::monomial_value(std::span<const Integer> exps) const {
  if (exps.size() != size()) throw Error(Errc::DimensionMismatch, "exponent vector has the wrong length");
  ValueExpr v;
  for (std::size_t i = 0; i < exps.size(); ++i) v += exps[i] * generators_[i];
  return v;
}

const Integer& Degree::value() const {
  if (!value_) throw Error(Errc::DimensionMismatch, "degree is infinite");
  return *value_;
}

Degree operator*(const Degree& a, const Degree& b) {
  if (!a.is_finite() || !b.is_finite()) return Degree::infinite();
  return Degree(Integer(a.value() * b.value()));
}

std::string to_string(const Degree& d) { return d.is_finite() ? to_string(d.value()) : "inf"; }

ExponentLattice::ExponentLattice(const IntMatrix& rows, const std::vector<Rational>& values) {
  if (values.size() != rows.rows()) throw Error(Errc::DimensionMismatch, "one value per lattice row expected");
  HermiteForm h = hermite_normal_form(rows);
  basis_ = h.basis;
  for (std::size_t i = 0; i < h.transform.rows(); ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < values.size(); ++j) v += h.transform(i, j) * values[j];
    values_.push_back(v);
  }
}

bool ExponentLattice::contains(std::span<const Integer> k) const { return base_value(k).has_value(); }

std::optional<Rational> ExponentLattice::base_value(std::span<const Integer> k) const {
  if (k.size() != dimension()) throw Error(Errc::DimensionMismatch, "exponent vector has the wrong length");
  // The basis is in echelon form: peel off one row per pivot.
  IntVector rest(k.begin(), k.end());
  Rational value = 0;
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    while (basis_(i, col) == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    if (rest[col] % basis_(i, col) != 0) return std::nullopt;
    Integer x = rest[col] / basis_(i, col);
    if (x == 0) continue;
    for (std::size_t c = col; c < dimension(); ++c) rest[c] -= x * basis_(i, c);
    value += x * values_[i];
  }
  if (!is_zero(rest)) return std::nullopt;
  return value;
}

ExponentLattice ExponentLattice::restrict_to(std::span<const std::size_t> coords) const {
  std::vector<std::size_t> others;
  for (std::size_t c = 0; c < dimension(); ++c)
    if (std::find(coords.begin(), coords.end(), c) == coords.end()) others.push_back(c);
  IntMatrix kernel = others.empty() ? IntMatrix::identity(rank()) : left_kernel(basis_.select_cols(others));
  IntMatrix rows(0, coords.size());
  std::vector<Rational> vals;
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    IntVector x = kernel.row(i);
    IntVector full = row_times(x, basis_);
    IntVector sub;
    for (std::size_t c : coords) sub.push_back(full[c]);
    rows.append_row(sub);
    Rational v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) v += x[j] * values_[j];
    vals.push_back(v);
  }
  return ExponentLattice(rows, vals);
}

Integer ExponentLattice::projection(std::size_t coord) const {
  Integer g = 0;
  for (std::size_t i = 0; i < rank(); ++i) g = gcd(g, basis_(i, coord));
  return g;
}

QuotientGroup::QuotientGroup(const ExponentLattice& lattice)
    : dimension_(lattice.dimension()), smith_(smith_normal_form(lattice.basis())) {}

IntVector QuotientGroup::class_of(std::span<const Integer> e) const {
  if (e.size() != dimension_) throw Error(Errc::DimensionMismatch, "exponent vector has the wrong length");
  IntVector y = row_times(e, smith_.v);
  for (std::size_t j = 0; j < smith_.rank; ++j) y[j] = floor_mod(y[j], smith_.invariant_factors[j]);
  return y;
}

Degree QuotientGroup::order(std::span<const Integer> e) const {
  IntVector y = class_of(e);
  for (std::size_t j = smith_.rank; j < y.size(); ++j)
    if (y[j] != 0) return Degree::infinite();
  Integer ord = 1;
  for (std::size_t j = 0; j < smith_.rank; ++j) {
    const Integer& d = smith_.invariant_factors[j];
    ord = lcm(ord, Integer(d / gcd(d, y[j])));
  }
  return Degree(ord);
}

namespace {

// A row (c, k_1..k_n) of the relation module records sum k_i a_i = c*delta.
// With a trivial base the c coordinate is dropped.
ExponentLattice compute_lattice(const BipotentPresentation& p) {
  const std::size_t n = p.size();
  const Rational& delta = p.base().unit();
  const bool trivial_base = p.base().is_trivial();
  const std::size_t off = trivial_base ? 0 : 1;

  // Formal images: one rational column (denominators cleared) and one
  // column per symbol.
  std::set<std::string> symbols;
  for (const auto& g : p.generators())
    for (const auto& [name, k] : g.symbols()) symbols.insert(name);
  std::vector<Rational> numeric(off + n);
  if (!trivial_base) numeric[0] = -delta;
  for (std::size_t i = 0; i < n; ++i) numeric[off + i] = p.generators()[i].offset();
  Integer den = 1;
  for (const auto& q : numeric) den = lcm(den, q.get_den());

  IntMatrix image(off + n, 1 + symbols.size());
  for (std::size_t i = 0; i < off + n; ++i) {
    image(i, 0) = Integer(numeric[i].get_num() * (den / numeric[i].get_den()));
    if (i < off) continue;
    std::size_t col = 1;
    for (const auto& name : symbols) {
      auto it = p.generators()[i - off].symbols().find(name);
      if (it != p.generators()[i - off].symbols().end()) image(i, col) = it->second;
      ++col;
    }
  }

  IntMatrix module = left_kernel(image);
  for (const auto& r : p.relations()) {
    IntVector row;
    if (!trivial_base) row.push_back(Integer(r.beta / delta));
    row.insert(row.end(), r.exps.begin(), r.exps.end());
    module.append_row(row);
  }
  IntMatrix sat = module.rows() ? saturation(module) : module;

  // Columns reordered to (k_1..k_n | c); the value of a row is c*delta.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) order.push_back(off + i);
  if (!trivial_base) order.push_back(0);
  IntMatrix reordered = sat.select_cols(order);
  HermiteForm h = hermite_normal_form(reordered, n);
  if (h.basis.rows() != sat.rows())
    throw Error(Errc::InconsistentRelations, "declared relations force a non-zero base element to vanish");

  IntMatrix rows(0, n);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < h.basis.rows(); ++i) {
    IntVector row = h.basis.row(i);
    values.push_back(trivial_base ? Rational(0) : Rational(row[n] * delta));
    row.resize(n);
    rows.append_row(row);
  }
  return ExponentLattice(rows, values);
}

Degree quotient_size(const IntMatrix& rows) {
  SmithDecomposition s = smith_normal_form(rows);
  if (s.free_rank > 0) return Degree::infinite();
  Integer prod = 1;
  for (const auto& d : s.invariant_factors) prod *= d;
  return Degree(prod);
}

}  // namespace

ExponentLattice exponent_lattice(const BipotentPresentation& p) { return compute_lattice(p); }

std::vector<Integer> ExtDecomposition::torsion_orders() const {
  std::vector<Integer> out;
  for (const auto& t : torsion) out.push_back(t.order);
  return out;
}

Degree ExtDecomposition::rank() const {
  if (free_rank > 0) return Degree::infinite();
  Integer prod = 1;
  for (const auto& t : torsion) prod *= t.order;
  return Degree(prod);
}

ExtDecomposition decompose_extension(const BipotentPresentation& p) {
  const std::size_t n = p.size();
  ExponentLattice lattice = exponent_lattice(p);
  ExtDecomposition out;
  out.smith = smith_normal_form(lattice.basis());
  const SmithDecomposition& s = out.smith;
  out.free_rank = s.free_rank;
  const Rational& delta = p.base().unit();

  for (std::size_t j = 0; j < s.rank; ++j) {
    if (s.invariant_factors[j] == 1) continue;
    TorsionMonomial t{s.v_inv.row(j), s.invariant_factors[j], std::nullopt};
    ValueExpr v = p.monomial_value(t.exps);
    if (v.is_numeric()) {
      Rational r = v.offset();
      if (delta != 0) r -= floor(Rational(r / delta)) * delta;
      t.representative = r;
    }
    out.torsion.push_back(std::move(t));
  }
  for (std::size_t j = s.rank; j < n; ++j) out.free_monomials.push_back(s.v_inv.row(j));

  for (std::size_t i = 0; i < n; ++i) {
    GeneratorExpression g;
    IntVector residual(n);
    residual[i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      Integer c = s.v(i, j);
      if (j < s.rank) {
        if (s.invariant_factors[j] == 1) continue;
        c = floor_mod(c, s.invariant_factors[j]);
        g.torsion_coeffs.push_back(c);
      } else {
        g.free_coeffs.push_back(c);
      }
      for (std::size_t k = 0; k < n; ++k) residual[k] -= c * s.v_inv(j, k);
    }
    auto beta = lattice.base_value(residual);
    if (!beta) throw Error(Errc::InvalidPresentation, "generator could not be regenerated");
    g.beta = *beta;
    out.generators.push_back(std::move(g));
  }
  return out;
}

bool is_divisibly_dependent(const BipotentPresentation& p, std::span<const std::size_t> subset) {
  if (subset.empty()) return false;
  return !exponent_lattice(p).restrict_to(subset).is_trivial();
}

std::optional<DependenceWitness> divisible_dependence_witness(const BipotentPresentation& p, const ValueExpr& b,
                                                              std::span<const std::size_t> subset) {
  const std::size_t n = p.size();
  ExponentLattice full = exponent_lattice(p.with_generator(b));
  std::vector<std::size_t> coords{n};
  coords.insert(coords.end(), subset.begin(), subset.end());
  ExponentLattice sub = full.restrict_to(coords);
  if (sub.is_trivial() || sub.basis()(0, 0) == 0) return std::nullopt;
  DependenceWitness w{sub.basis()(0, 0), IntVector(n), sub.values()[0]};
  for (std::size_t i = 0; i < subset.size(); ++i) w.exps[subset[i]] = -sub.basis()(0, i + 1);
  return w;
}

Degree torsion_degree(const BipotentPresentation& p, std::span<const Integer> exps) {
  return QuotientGroup(exponent_lattice(p)).order(exps);
}

Degree torsion_degree(const BipotentPresentation& p, const ValueExpr& elem) {
  const std::size_t n = p.size();
  IntVector e(n + 1);
  e[n] = 1;
  return QuotientGroup(exponent_lattice(p.with_generator(elem))).order(e);
}

bool contains_value(const BipotentPresentation& p, const ValueExpr& v) {
  return exponent_lattice(p.with_generator(v)).projection(p.size()) == 1;
}

Degree extension_rank(const BipotentPresentation& p) { return quotient_size(exponent_lattice(p).basis()); }

Degree extension_rank(const BipotentPresentation& p, std::span<const Generator> sub) {
  BipotentPresentation big = p;
  for (const auto& g : sub) {
    if (!contains_value(p, g))
      throw Error(Errc::NotASubextension, to_string(g) + " does not lie in the extension");
    big = big.with_generator(g);
  }
  IntMatrix rows = exponent_lattice(big).basis();
  for (std::size_t j = 0; j < sub.size(); ++j) {
    IntVector e(big.size());
    e[p.size() + j] = 1;
    rows.append_row(e);
  }
  return quotient_size(rows);
}

Degree extension_rank(const BipotentPresentation& p, const BipotentPresentation& sub) {
  if (!(sub.base() == p.base())) throw Error(Errc::NotASubextension, "base groups differ");
  return extension_rank(p, std::span<const Generator>(sub.generators()));
}

bool is_bipotent_semifield(const BipotentPresentation& p) {
  return smith_normal_form(exponent_lattice(p).basis()).free_rank == 0;
}

bool torsion_subdomain_contains(const BipotentPresentation& p, const ValueExpr& elem) {
  return torsion_degree(p, elem).is_finite();
}

bool linearly_dependent_pair(const BipotentPresentation& p, const ValueExpr& x, const ValueExpr& y) {
  return torsion_degree(p, x - y) == Degree(1);
}

bool monoid_contains(const BipotentPresentation& p, std::span<const Integer> target, unsigned bound) {
  const std::size_t n = p.size();
  QuotientGroup q(exponent_lattice(p));
  IntVector want = q.class_of(target);
  IntVector j(n);
  while (true) {
    if (q.class_of(j) == want) return true;
    std::size_t i = 0;
    while (i < n && j[i] == bound) j[i++] = 0;
    if (i == n) return false;
    j[i] += 1;
  }
}

}  // namespace layered
