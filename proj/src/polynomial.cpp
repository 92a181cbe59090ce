#include "layered/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "layered/error.hpp"

namespace layered {

SignedPoly::SignedPoly(Rational c) { add_term(0, std::move(c)); }

SignedPoly::SignedPoly(const Terms& terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

SignedPoly SignedPoly::from_coeffs(const std::vector<Rational>& coeffs) {
  SignedPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(static_cast<unsigned>(k), coeffs[k]);
  return p;
}

SignedPoly SignedPoly::monomial(Rational c, unsigned degree) {
  SignedPoly p;
  p.add_term(degree, c);
  return p;
}

Rational SignedPoly::coeff(unsigned k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SignedPoly::leading_coeff() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

std::vector<Rational> SignedPoly::coeffs() const {
  std::vector<Rational> out(static_cast<std::size_t>(degree() + 1));
  for (const auto& [k, c] : terms_) out[k] = c;
  return out;
}

Rational SignedPoly::eval(const Rational& x) const {
  // Horner over the dense form.
  Rational acc = 0;
  int d = degree();
  for (int k = d; k >= 0; --k) acc = acc * x + coeff(static_cast<unsigned>(k));
  return acc;
}

SignedPoly SignedPoly::derivative() const {
  SignedPoly p;
  for (const auto& [k, c] : terms_)
    if (k > 0) p.add_term(k - 1, Rational(c * k));
  return p;
}

SignedPoly SignedPoly::monic() const {
  if (is_zero()) return *this;
  Rational lc = leading_coeff();
  SignedPoly p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, Rational(c / lc));
  return p;
}

void SignedPoly::add_term(unsigned k, const Rational& raw) {
  // gmp arithmetic assumes canonical operands
  Rational c = raw;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SignedPoly& SignedPoly::operator+=(const SignedPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SignedPoly& SignedPoly::operator-=(const SignedPoly& o) { return *this += -o; }

SignedPoly& SignedPoly::operator*=(const SignedPoly& o) {
  SignedPoly out;
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) out.add_term(i + j, Rational(a * b));
  *this = std::move(out);
  return *this;
}

SignedPoly SignedPoly::operator-() const {
  SignedPoly p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, Rational(-c));
  return p;
}

std::pair<SignedPoly, SignedPoly> divmod(const SignedPoly& a, const SignedPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  SignedPoly q, r = a;
  const int db = b.degree();
  const Rational lb = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= db) {
    SignedPoly t = SignedPoly::monomial(Rational(r.leading_coeff() / lb), static_cast<unsigned>(r.degree() - db));
    q += t;
    r -= t * b;
  }
  return {q, r};
}

SignedPoly operator%(const SignedPoly& a, const SignedPoly& b) { return divmod(a, b).second; }

SignedPoly gcd(const SignedPoly& a, const SignedPoly& b) {
  SignedPoly x = a, y = b;
  while (!y.is_zero()) {
    SignedPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const SignedPoly& a, const SignedPoly& b) {
  SignedPoly r0 = a, r1 = b, s0 = 1, s1, t0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  SignedPoly inv(Rational(1 / r0.leading_coeff()));
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

std::vector<SignedPoly> sturm_chain(const SignedPoly& p) {
  std::vector<SignedPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    SignedPoly r = chain[chain.size() - 2] % chain.back();
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int sign_at_infinity(const SignedPoly& p, bool positive) {
  int s = sign(p.leading_coeff());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

std::size_t variations(const std::vector<SignedPoly>& chain, const std::optional<Rational>& x, bool plus_inf) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = x ? sign(q.eval(*x)) : sign_at_infinity(q, plus_inf);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Integer multiple of p with coprime integer coefficients.
std::vector<Integer> primitive_integer(const SignedPoly& p) {
  Integer den = 1;
  for (const auto& [k, c] : p.terms()) den = lcm(den, c.get_den());
  std::vector<Integer> out(static_cast<std::size_t>(p.degree() + 1));
  Integer content = 0;
  for (const auto& [k, c] : p.terms()) {
    out[k] = c.get_num() * (den / c.get_den());
    content = gcd(content, out[k]);
  }
  for (auto& c : out) c /= content;
  return out;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    Integer e = n / d;
    if (e != d) large.push_back(e);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool has_rational_root(const SignedPoly& p, const std::vector<Integer>& f) {
  if (f.front() == 0) return true;
  for (const auto& a : positive_divisors(f.front()))
    for (const auto& b : positive_divisors(f.back()))
      for (int s : {1, -1})
        if (p.eval(make_rational(Integer(s * a), b)) == 0) return true;
  return false;
}

// The polynomial of degree <= d through (xs[i], ys[i]), by divided differences.
SignedPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
  SignedPoly out(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    out *= SignedPoly::x() - SignedPoly(Rational(xs[i]));
    out += SignedPoly(dd[i]);
  }
  return out;
}

bool integral(const SignedPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.get_den() == 1; });
}

// Search for an integer factor of degree exactly d.
bool has_factor_of_degree(const SignedPoly& p, int d) {
  // Evaluation points with few divisors keep the search small.
  struct Point {
    Integer x, value;
    std::size_t divisors;
  };
  std::vector<Point> candidates;
  for (long i = 0; candidates.size() < static_cast<std::size_t>(3 * (d + 1)) && i < 200; ++i) {
    long x = (i % 2 == 0) ? i / 2 : -(i + 1) / 2;
    Rational v = p.eval(Rational(x));
    Integer value = v.get_num();
    if (value == 0) return true;  // unreachable after the rational root test
    candidates.push_back({Integer(x), value, positive_divisors(value).size()});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Point& a, const Point& b) { return a.divisors < b.divisors; });
  candidates.resize(static_cast<std::size_t>(d + 1));

  std::vector<Integer> xs;
  std::vector<std::vector<Integer>> choices;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    xs.push_back(candidates[j].x);
    std::vector<Integer> options;
    for (const auto& div : positive_divisors(candidates[j].value)) {
      options.push_back(div);
      if (j > 0) options.push_back(Integer(-div));  // g and -g are the same factor
    }
    choices.push_back(std::move(options));
  }

  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Integer> ys(choices.size());
  while (true) {
    for (std::size_t j = 0; j < idx.size(); ++j) ys[j] = choices[j][idx[j]];
    SignedPoly g = interpolate(xs, ys);
    if (g.degree() == d && integral(g) && (p % g).is_zero()) return true;
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
    if (j == idx.size()) return false;
  }
}

}  // namespace

std::size_t count_real_roots(const SignedPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p);
  std::size_t a = variations(chain, lo, false);
  std::size_t b = variations(chain, hi, true);
  return a >= b ? a - b : 0;
}

bool is_irreducible(const SignedPoly& p) {
  const int n = p.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  std::vector<Integer> f = primitive_integer(p);
  if (has_rational_root(p, f)) return false;
  SignedPoly integer_poly;
  for (std::size_t k = 0; k < f.size(); ++k) integer_poly += SignedPoly::monomial(Rational(f[k]), static_cast<unsigned>(k));
  for (int d = 2; d <= n / 2; ++d)
    if (has_factor_of_degree(integer_poly, d)) return false;
  return true;
}

SignedPoly parse_polynomial(std::string_view text, std::string_view var) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
  auto fail = [&](std::size_t pos, const std::string& why) {
    throw Error(Errc::ParseError, why + " at position " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };

  SignedPoly out;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail(i, "expected '+' or '-'");
    }
    first = false;

    Rational coeff = 1;
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    bool has_coeff = i > start;
    if (has_coeff) coeff = parse_rational(s.substr(start, i - start));
    unsigned degree = 0;
    if (has_coeff && i < s.size() && s[i] == '*') ++i;
    if (s.compare(i, var.size(), var) == 0) {
      i += var.size();
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        std::size_t e = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == e) fail(i, "expected an exponent");
        degree = static_cast<unsigned>(std::stoul(s.substr(e, i - e)));
      }
    } else if (!has_coeff) {
      fail(i, "expected a coefficient or '" + std::string(var) + "'");
    } else if (s[i - 1] == '*') {
      fail(i, "expected '" + std::string(var) + "' after '*'");
    }
    out += SignedPoly::monomial(Rational(sgn * coeff), degree);
  }
  return out;
}

std::string to_string(const SignedPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    std::string term;
    if (k == 0)
      term = to_string(mag);
    else {
      term = mag == 1 ? "" : to_string(mag) + "*";
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (s.empty())
      s = (c < 0 ? "-" : "") + term;
    else
      s += (c < 0 ? " - " : " + ") + term;
  }
  return s;
}

PosPoly::PosPoly(SignedPoly p) : p_(std::move(p)) {
  if (p_.is_zero()) throw Error(Errc::EmptyPolynomial, "positive polynomials exclude zero");
  for (const auto& [k, c] : p_.terms())
    if (c < 0) throw Error(Errc::NonPositiveCoefficient, "coefficient of degree " + std::to_string(k) + " is negative");
}

}  // namespace layered
