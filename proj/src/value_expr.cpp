#include "layered/value_expr.hpp"

#include <cctype>

#include "layered/error.hpp"

namespace layered {

ValueExpr ValueExpr::symbol(std::string name, Integer coeff) {
  ValueExpr v;
  if (coeff != 0) v.symbols_.emplace(std::move(name), std::move(coeff));
  return v;
}

ValueExpr& ValueExpr::operator+=(const ValueExpr& o) {
  offset_ += o.offset_;
  for (const auto& [name, k] : o.symbols_) {
    Integer sum = symbols_[name] + k;
    if (sum == 0)
      symbols_.erase(name);
    else
      symbols_[name] = sum;
  }
  return *this;
}

ValueExpr& ValueExpr::operator-=(const ValueExpr& o) { return *this += -o; }

ValueExpr operator*(const Integer& k, const ValueExpr& v) {
  ValueExpr out;
  if (k == 0) return out;
  out.offset_ = v.offset_ * k;
  for (const auto& [name, c] : v.symbols_) out.symbols_.emplace(name, Integer(c * k));
  return out;
}

std::string to_string(const ValueExpr& v) {
  std::string s;
  if (v.offset() != 0 || v.is_numeric()) s = to_string(v.offset());
  for (const auto& [name, k] : v.symbols()) {
    Integer mag = abs(k);
    std::string term = (mag == 1 ? "" : to_string(mag) + "*") + name;
    if (s.empty())
      s = (k < 0 ? "-" : "") + term;
    else
      s += (k < 0 ? " - " : " + ") + term;
  }
  return s;
}

ValueExpr parse_value_expr(std::string_view text) {
  ValueExpr out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  skip();
  if (i == text.size()) throw Error(Errc::ParseError, "empty value expression");
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw Error(Errc::ParseError, "expected '+' or '-' in '" + std::string(text) + "'");
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
    std::string term(text.substr(start, i - start));
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.pop_back();
    if (term.empty()) throw Error(Errc::ParseError, "dangling sign in '" + std::string(text) + "'");
    auto star = term.find('*');
    std::string coeff = star == std::string::npos ? "" : term.substr(0, star);
    std::string rest = star == std::string::npos ? term : term.substr(star + 1);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.erase(rest.begin());
    const bool is_symbol = !rest.empty() && (std::isalpha(static_cast<unsigned char>(rest.front())) || rest.front() == '_');
    if (is_symbol) {
      for (char c : rest)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw Error(Errc::ParseError, "bad symbol name '" + rest + "'");
      Integer k = 1;
      if (!coeff.empty()) {
        Rational c = parse_rational(coeff);
        if (c.get_den() != 1) throw Error(Errc::ParseError, "symbol coefficients must be integers: '" + term + "'");
        k = c.get_num();
      }
      out += ValueExpr::symbol(rest, Integer(sign * k));
    } else {
      if (star != std::string::npos) throw Error(Errc::ParseError, "unexpected '*' in '" + term + "'");
      out += ValueExpr(Rational(sign * parse_rational(term)));
    }
    first = false;
    skip();
  }
  return out;
}

}  // namespace layered
