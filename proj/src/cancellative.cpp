#include "layered/cancellative.hpp"

#include <algorithm>

#include "layered/error.hpp"

namespace layered {

SignSplit diff_split(const SignedPoly& m) {
  SignedPoly::Terms plus, minus;
  for (const auto& [k, c] : m.terms()) {
    if (c > 0)
      plus.emplace(k, c);
    else
      minus.emplace(k, Rational(-c));
  }
  if (plus.empty() || minus.empty())
    throw Error(Errc::NoSignChange, to_string(m) + " has coefficients of only one sign");
  return {PosPoly(SignedPoly(plus)), PosPoly(SignedPoly(minus))};
}

Interval AlgebraicGenerator::refined(const Rational& width) const {
  Interval iv = interval_;
  int s_lo = sign(m_.eval(iv.lo));
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = sign(m_.eval(mid));
    if (s == s_lo)
      iv.lo = mid;
    else
      iv.hi = mid;  // s != 0: m is irreducible of degree >= 2
  }
  return iv;
}

bool operator==(const AlgebraicGenerator& a, const AlgebraicGenerator& b) {
  if (&a == &b) return true;
  if (a.m_ != b.m_) return false;
  Rational lo = std::max(a.interval_.lo, b.interval_.lo);
  Rational hi = std::min(a.interval_.hi, b.interval_.hi);
  return lo < hi && count_real_roots(a.m_, lo, hi) == 1;
}

AlgebraicGenerator validate_generator(const SignedPoly& m, const Interval& interval) {
  if (!m.is_monic()) throw Error(Errc::NotMonic, to_string(m) + " is not monic");
  if (m.degree() == 1)
    throw Error(Errc::TrivialExtension, "the root of " + to_string(m) + " already lies in the base semifield");
  if (!is_irreducible(m)) throw Error(Errc::Reducible, to_string(m) + " factors over Q");
  if (count_real_roots(m, Rational(0), std::nullopt) == 0)
    throw Error(Errc::NoPositiveRoot, to_string(m) + " has no positive real root");
  const auto& [lo, hi] = interval;
  std::string where = "(" + to_string(lo) + ", " + to_string(hi) + ")";
  if (lo <= 0 || lo >= hi) throw Error(Errc::IntervalNotIsolating, where + " is not a positive interval");
  if (sign(m.eval(lo)) * sign(m.eval(hi)) >= 0)
    throw Error(Errc::IntervalNotIsolating, to_string(m) + " does not change sign on " + where);
  if (count_real_roots(m, lo, hi) != 1)
    throw Error(Errc::IntervalNotIsolating, where + " contains more than one root of " + to_string(m));
  bool all_positive = std::all_of(m.terms().begin(), m.terms().end(), [](const auto& t) { return t.second > 0; });
  if (all_positive) throw Error(Errc::AllPositiveCoefficients, to_string(m) + " is a positive polynomial");
  return AlgebraicGenerator(m, interval);
}

GeneratorRef make_generator(const SignedPoly& m, const Interval& interval) {
  return std::make_shared<const AlgebraicGenerator>(validate_generator(m, interval));
}

int ext_dimension(const AlgebraicGenerator& g) { return g.degree(); }

ExtElem::ExtElem(GeneratorRef gen, const SignedPoly& p) : gen_(std::move(gen)) {
  const auto n = static_cast<std::size_t>(gen_->degree());
  SignedPoly r = p % gen_->minimal_polynomial();
  coeffs_.assign(n, Rational(0));
  for (const auto& [k, c] : r.terms()) coeffs_[k] = c;
}

ExtElem::ExtElem(GeneratorRef gen, const std::vector<Rational>& coeffs)
    : ExtElem(std::move(gen), SignedPoly::from_coeffs(coeffs)) {}

ExtElem ExtElem::constant(GeneratorRef gen, Rational c) { return ExtElem(std::move(gen), SignedPoly(std::move(c))); }

ExtElem ExtElem::root(GeneratorRef gen) { return ExtElem(std::move(gen), SignedPoly::x()); }

bool ExtElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool ExtElem::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool ExtElem::in_cone() const {
  bool some = false;
  for (const auto& c : coeffs_) {
    if (c < 0) return false;
    if (c > 0) some = true;
  }
  return some;
}

bool operator==(const ExtElem& a, const ExtElem& b) { return *a.gen_ == *b.gen_ && a.coeffs_ == b.coeffs_; }

namespace {

void require_same(const ExtElem& a, const ExtElem& b) {
  if (a.generator() != b.generator() && !(*a.generator() == *b.generator()))
    throw Error(Errc::GeneratorMismatch, "elements belong to different extensions");
}

}  // namespace

ExtElem ext_add(const ExtElem& a, const ExtElem& b) {
  require_same(a, b);
  return ExtElem(a.generator(), a.lift() + b.lift());
}

ExtElem ext_sub(const ExtElem& a, const ExtElem& b) {
  require_same(a, b);
  return ExtElem(a.generator(), a.lift() - b.lift());
}

ExtElem ext_mul(const ExtElem& a, const ExtElem& b) {
  require_same(a, b);
  return ExtElem(a.generator(), a.lift() * b.lift());
}

ExtElem ext_inverse(const ExtElem& e) {
  if (e.is_zero()) throw Error(Errc::ZeroElement, "zero has no inverse");
  // s*e + t*m = 1 since m is irreducible and does not divide e.
  ExtendedGcd g = extended_gcd(e.lift(), e.generator()->minimal_polynomial());
  return ExtElem(e.generator(), g.s);
}

ExtElem ext_pow(const ExtElem& e, unsigned long k) {
  ExtElem result = ExtElem::constant(e.generator(), 1);
  ExtElem base = e;
  while (k > 0) {
    if (k & 1) result = ext_mul(result, base);
    base = ext_mul(base, base);
    k >>= 1;
  }
  return result;
}

Interval enclosure(const ExtElem& e, const Rational& width) {
  Interval root = e.generator()->refined(width);
  // 0 < lo <= d <= hi, so each power is monotone on the interval.
  Interval out{0, 0};
  Rational plo = 1, phi = 1;
  for (const auto& c : e.coeffs()) {
    if (c >= 0) {
      out.lo += c * plo;
      out.hi += c * phi;
    } else {
      out.lo += c * phi;
      out.hi += c * plo;
    }
    plo *= root.lo;
    phi *= root.hi;
  }
  return out;
}

int sign_at_root(const ExtElem& e) {
  if (e.is_zero()) return 0;
  const Interval& iv = e.generator()->interval();
  Rational width = iv.hi - iv.lo;
  // A non-zero element has a non-zero value, so the enclosure eventually
  // excludes 0.
  while (true) {
    Interval enc = enclosure(e, width);
    if (enc.lo > 0) return 1;
    if (enc.hi < 0) return -1;
    width /= 16;
  }
}

ConeReport cone_report(const ExtElem& e) { return {e.in_cone(), sign_at_root(e) > 0}; }

namespace {

// Solves sum_j x_j cols[j] = target over Q, if possible.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& target) {
  const std::size_t rows = target.size(), k = cols.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
    a[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][k] / a[i][pivot_col[i]];
  return x;
}

}  // namespace

SignedPoly minimal_polynomial(const ExtElem& e) {
  std::vector<std::vector<Rational>> powers{ExtElem::constant(e.generator(), 1).coeffs()};
  ExtElem p = ExtElem::constant(e.generator(), 1);
  for (int k = 1;; ++k) {
    p = ext_mul(p, e);
    auto x = solve_columns(powers, p.coeffs());
    if (x) {
      SignedPoly m = SignedPoly::monomial(Rational(1), static_cast<unsigned>(k));
      for (std::size_t j = 0; j < x->size(); ++j) m -= SignedPoly::monomial((*x)[j], static_cast<unsigned>(j));
      return m;
    }
    powers.push_back(p.coeffs());
  }
}

bool kernel_contains(const PosPoly& a, const PosPoly& b, const AlgebraicGenerator& g) {
  return ((a.poly() - b.poly()) % g.minimal_polynomial()).is_zero();
}

PosRationalFunction operator+(const PosRationalFunction& a, const PosRationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

PosRationalFunction operator*(const PosRationalFunction& a, const PosRationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

PosRationalFunction operator/(const PosRationalFunction& a, const PosRationalFunction& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::pair<SignedPoly, SignedPoly> PosRationalFunction::reduced() const {
  SignedPoly g = gcd(num_.poly(), den_.poly());
  SignedPoly n = divmod(num_.poly(), g).first, d = divmod(den_.poly(), g).first;
  SignedPoly scale(Rational(1 / d.leading_coeff()));
  return {n * scale, d * scale};
}

bool ratfunc_eq(const PosRationalFunction& a, const PosRationalFunction& b) {
  return a.num().poly() * b.den().poly() == b.num().poly() * a.den().poly();
}

std::string to_string(const PosRationalFunction& r, std::string_view var) {
  return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

PosRationalFunction kernel_sample(const PosPoly& g1, const std::optional<PosPoly>& g2,
                                  const std::optional<PosPoly>& h, const AlgebraicGenerator& gen) {
  SignSplit split = diff_split(gen.minimal_polynomial());
  std::optional<PosPoly> num = split.plus * g1, den = split.minus * g1;
  if (g2) {
    num = *num + split.minus * *g2;
    den = *den + split.plus * *g2;
  }
  if (h) {
    PosPoly shared = g2 ? *h * (g1 + *g2) : *h * g1;
    num = *num + shared;
    den = *den + shared;
  }
  return {*num, *den};
}

bool in_kernel(const PosRationalFunction& r, const AlgebraicGenerator& gen) {
  return kernel_contains(r.num(), r.den(), gen);
}

std::string to_string(const ExtElem& e) { return to_string(e.lift(), "d"); }

}  // namespace layered
