#include "layered/rational.hpp"

#include <cctype>

#include "layered/error.hpp"

namespace layered {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Rational pow(const Rational& q, unsigned long k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), k);
  return r;
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroHasNoLayer: return "ZeroHasNoLayer";
    case Errc::BottomValue: return "BottomValue";
    case Errc::NonPositiveLayer: return "NonPositiveLayer";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidPresentation: return "InvalidPresentation";
    case Errc::InconsistentRelations: return "InconsistentRelations";
    case Errc::NotASubextension: return "NotASubextension";
    case Errc::NoSignChange: return "NoSignChange";
    case Errc::NotMonic: return "NotMonic";
    case Errc::Reducible: return "Reducible";
    case Errc::NoPositiveRoot: return "NoPositiveRoot";
    case Errc::IntervalNotIsolating: return "IntervalNotIsolating";
    case Errc::AllPositiveCoefficients: return "AllPositiveCoefficients";
    case Errc::TrivialExtension: return "TrivialExtension";
    case Errc::GeneratorMismatch: return "GeneratorMismatch";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case Errc::EmptyPolynomial: return "EmptyPolynomial";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidPolynomial: return "InvalidPolynomial";
    case Errc::ValueNotInBase: return "ValueNotInBase";
    case Errc::LayerNotInBase: return "LayerNotInBase";
    case Errc::UnsupportedTower: return "UnsupportedTower";
    case Errc::NonNumericValue: return "NonNumericValue";
    case Errc::DescriptorMismatch: return "DescriptorMismatch";
    case Errc::UnknownBinding: return "UnknownBinding";
    case Errc::DuplicateBinding: return "DuplicateBinding";
  }
  return "Unknown";
}

}  // namespace layered
