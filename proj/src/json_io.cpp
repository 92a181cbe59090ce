#include "layered/json_io.hpp"

#include "layered/error.hpp"

namespace layered {

namespace {

[[noreturn]] void shape_error(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, (path.empty() ? std::string("input") : path) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) shape_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) shape_error(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

// Re-raises a library error from a nested parse with the path prepended.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != Errc::ParseError) throw;
    std::string msg = e.what();
    const std::string prefix = "ParseError: ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    shape_error(path, msg);
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, "malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

Json to_json(const Degree& d) { return d.is_finite() ? to_json(d.value()) : Json("infinite"); }

Json to_json(const ValueExpr& v) { return to_string(v); }

Json to_json(const SignedPoly& p) {
  Json terms = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) terms[std::to_string(it->first)] = to_string(it->second);
  return Json{{"poly", terms}};
}

Json to_json(const AlgebraicGenerator& g) {
  return Json{{"m", to_json(g.minimal_polynomial())},
              {"interval", Json::array({to_json(g.interval().lo), to_json(g.interval().hi)})}};
}

Json to_json(const BipotentPresentation& p) {
  Json base = Json::array();
  for (const auto& g : p.base().generators()) base.push_back(to_json(g));
  Json gens = Json::array();
  for (const auto& g : p.generators()) {
    if (g.is_numeric())
      gens.push_back({{"num", to_json(g.offset())}});
    else if (g.offset() == 0 && g.symbols().size() == 1 && g.symbols().begin()->second == 1)
      gens.push_back({{"sym", g.symbols().begin()->first}});
    else
      gens.push_back({{"expr", to_string(g)}});
  }
  Json out{{"base", base}, {"generators", gens}};
  if (!p.relations().empty()) {
    Json rels = Json::array();
    for (const auto& r : p.relations()) {
      Json exps = Json::array();
      for (const auto& k : r.exps) exps.push_back(to_json(k));
      rels.push_back({{"exps", exps}, {"beta", to_json(r.beta)}});
    }
    out["relations"] = rels;
  }
  return out;
}

Json to_json(const SortPart& s) {
  if (std::holds_alternative<BaseSort>(s)) return Json{{"kind", "base"}};
  if (const auto* a = std::get_if<AlgebraicSort>(&s)) {
    Json out{{"kind", "algebraic"}};
    out.update(to_json(*a->gen));
    return out;
  }
  const auto& f = std::get<FreeSort>(s);
  return Json{{"kind", "free"}, {"symbol", f.symbol}, {"exponent", f.exponent}, {"fractions", f.fractions}};
}

Json to_json(const UniformDescriptor& d) { return Json{{"sort", to_json(d.sort)}, {"value", to_json(d.value)}}; }

Json to_json(const SortElem& layer) {
  if (const auto* q = std::get_if<Rational>(&layer)) return to_json(*q);
  if (const auto* e = std::get_if<ExtElem>(&layer)) {
    Json out = to_json(*e->generator());
    Json coeffs = Json::array();
    for (const auto& c : e->coeffs()) coeffs.push_back(to_json(c));
    out["coeffs"] = coeffs;
    return out;
  }
  const auto& f = std::get<FreeLayer>(layer);
  return Json{{"free", f.symbol}, {"num", to_json(f.f.num().poly())}, {"den", to_json(f.f.den().poly())}};
}

Json to_json(const ExtScalar& a) { return Json{{"layer", to_json(a.layer)}, {"value", to_json(a.value)}}; }

Json to_json(const LayeredPoly& f) {
  Json out = Json::array();
  for (const auto& t : f.terms())
    out.push_back({{"layer", to_json(t.coeff.layer().value())}, {"value", to_json(t.coeff.value().value())}, {"exp", t.exp}});
  return out;
}

Json to_json(const PosRationalFunction& r) { return Json{{"num", to_json(r.num().poly())}, {"den", to_json(r.den().poly())}}; }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) shape_error(path, "expected a rational such as \"1/2\"");
  return at_path(path, [&] { return parse_rational(j.get<std::string>()); });
}

Integer integer_from_json(const Json& j, const std::string& path) {
  Rational q = rational_from_json(j, path);
  if (q.get_den() != 1) shape_error(path, "expected an integer");
  return q.get_num();
}

ValueExpr value_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return ValueExpr(Rational(j.get<long>()));
  if (j.is_string()) return at_path(path, [&] { return parse_value_expr(j.get<std::string>()); });
  if (j.is_object()) {
    if (j.contains("num")) return ValueExpr(rational_from_json(j["num"], child(path, "num")));
    if (j.contains("sym")) {
      if (!j["sym"].is_string() || j["sym"].get<std::string>().empty()) shape_error(child(path, "sym"), "expected a name");
      return at_path(child(path, "sym"), [&] { return parse_value_expr(j["sym"].get<std::string>()); });
    }
    if (j.contains("expr")) return value_from_json(j["expr"], child(path, "expr"));
  }
  shape_error(path, "expected a value: \"1/2\", \"1/2 + g\", {\"num\": ...} or {\"sym\": ...}");
}

SignedPoly poly_from_json(const Json& j, const std::string& path, std::string_view var) {
  if (j.is_string()) return at_path(path, [&] { return parse_polynomial(j.get<std::string>(), var); });
  if (j.is_number_integer()) return SignedPoly(Rational(j.get<long>()));
  if (!j.is_object()) shape_error(path, "expected a polynomial");
  if (j.contains("poly")) return poly_from_json(j["poly"], child(path, "poly"), var);
  SignedPoly out;
  for (const auto& [key, coeff] : j.items()) {
    unsigned long degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoul(key, &used);
      if (used != key.size() || key[0] == '-' || key[0] == '+') throw std::invalid_argument(key);
    } catch (const std::exception&) {
      shape_error(path, "degree \"" + key + "\" is not a non-negative integer");
    }
    out += SignedPoly::monomial(rational_from_json(coeff, child(path, key)), static_cast<unsigned>(degree));
  }
  return out;
}

PosPoly pos_poly_from_json(const Json& j, const std::string& path, std::string_view var) {
  return PosPoly(poly_from_json(j, path, var));
}

GeneratorRef generator_from_json(const Json& j, const std::string& path) {
  SignedPoly m = poly_from_json(member(j, "m", path), child(path, "m"));
  const Json& iv = member(j, "interval", path);
  if (!iv.is_array() || iv.size() != 2) shape_error(child(path, "interval"), "expected [lo, hi]");
  Interval interval{rational_from_json(iv[0], index(child(path, "interval"), 0)),
                    rational_from_json(iv[1], index(child(path, "interval"), 1))};
  return make_generator(m, interval);
}

BipotentPresentation presentation_from_json(const Json& j, const std::string& path) {
  const Json& base = member(j, "base", path);
  if (!base.is_array()) shape_error(child(path, "base"), "expected an array of rationals");
  std::vector<Rational> base_gens;
  for (std::size_t i = 0; i < base.size(); ++i) base_gens.push_back(rational_from_json(base[i], index(child(path, "base"), i)));

  const Json& gens = member(j, "generators", path);
  if (!gens.is_array()) shape_error(child(path, "generators"), "expected an array");
  std::vector<Generator> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string p = index(child(path, "generators"), i);
    if (!gens[i].is_object()) shape_error(p, "expected {\"num\": ...} or {\"sym\": ...}");
    generators.push_back(value_from_json(gens[i], p));
  }

  std::vector<Relation> relations;
  if (j.contains("relations")) {
    const Json& rels = j["relations"];
    if (!rels.is_array()) shape_error(child(path, "relations"), "expected an array");
    for (std::size_t i = 0; i < rels.size(); ++i) {
      std::string p = index(child(path, "relations"), i);
      const Json& exps = member(rels[i], "exps", p);
      if (!exps.is_array()) shape_error(child(p, "exps"), "expected an array of integers");
      Relation r;
      for (std::size_t k = 0; k < exps.size(); ++k) r.exps.push_back(integer_from_json(exps[k], index(child(p, "exps"), k)));
      r.beta = rels[i].contains("beta") ? rational_from_json(rels[i]["beta"], child(p, "beta")) : Rational(0);
      relations.push_back(std::move(r));
    }
  }
  return BipotentPresentation(ValueLattice(base_gens), generators, relations);
}

UniformDescriptor descriptor_from_json(const Json& j, const std::string& path) {
  const Json& sort = member(j, "sort", path);
  std::string sp = child(path, "sort");
  const Json& kind = member(sort, "kind", sp);
  if (!kind.is_string()) shape_error(child(sp, "kind"), "expected \"base\", \"algebraic\" or \"free\"");
  SortPart part;
  std::string k = kind.get<std::string>();
  if (k == "base") {
    part = BaseSort{};
  } else if (k == "algebraic") {
    part = AlgebraicSort{generator_from_json(sort, sp)};
  } else if (k == "free") {
    const Json& symbol = member(sort, "symbol", sp);
    if (!symbol.is_string()) shape_error(child(sp, "symbol"), "expected a name");
    FreeSort f{symbol.get<std::string>(), 1, false};
    if (sort.contains("exponent")) {
      if (!sort["exponent"].is_number_integer() || sort["exponent"].get<long>() == 0)
        shape_error(child(sp, "exponent"), "expected a non-zero integer");
      f.exponent = sort["exponent"].get<long>();
    }
    if (sort.contains("fractions")) {
      if (!sort["fractions"].is_boolean()) shape_error(child(sp, "fractions"), "expected true or false");
      f.fractions = sort["fractions"].get<bool>();
    }
    part = f;
  } else {
    shape_error(child(sp, "kind"), "unknown sort kind \"" + k + "\"");
  }
  return {part, presentation_from_json(member(j, "value", path), child(path, "value"))};
}

SortElem layer_from_json(const Json& j, const std::string& path) {
  if (j.is_string() || j.is_number_integer()) return rational_from_json(j, path);
  if (!j.is_object()) shape_error(path, "expected a layer");
  if (j.contains("m")) {
    GeneratorRef g = generator_from_json(j, path);
    const Json& coeffs = member(j, "coeffs", path);
    if (!coeffs.is_array()) shape_error(child(path, "coeffs"), "expected an array of rationals");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < coeffs.size(); ++i) c.push_back(rational_from_json(coeffs[i], index(child(path, "coeffs"), i)));
    return ExtElem(g, c);
  }
  if (j.contains("free")) {
    if (!j["free"].is_string()) shape_error(child(path, "free"), "expected a symbol name");
    std::string sym = j["free"].get<std::string>();
    PosPoly num = pos_poly_from_json(member(j, "num", path), child(path, "num"), sym);
    PosPoly den = j.contains("den") ? pos_poly_from_json(j["den"], child(path, "den"), sym) : PosPoly::constant(1);
    return FreeLayer{sym, PosRationalFunction(num, den)};
  }
  shape_error(path, "expected a rational, {\"m\", \"interval\", \"coeffs\"} or {\"free\", \"num\"}");
}

ExtScalar scalar_from_json(const Json& j, const std::string& path) {
  return ExtScalar(layer_from_json(member(j, "layer", path), child(path, "layer")),
                   value_from_json(member(j, "value", path), child(path, "value")));
}

LayeredPoly layered_poly_from_json(const Json& j, const std::string& path) {
  const Json& terms = j.is_object() ? member(j, "terms", path) : j;
  if (!terms.is_array()) shape_error(path, "expected an array of terms");
  std::vector<LayeredTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string p = index(path, i);
    const Json& exp = member(terms[i], "exp", p);
    if (!exp.is_number_unsigned()) shape_error(child(p, "exp"), "expected a non-negative integer");
    Rational layer = rational_from_json(member(terms[i], "layer", p), child(p, "layer"));
    Rational value = rational_from_json(member(terms[i], "value", p), child(p, "value"));
    out.push_back({LayeredElem(Layer(layer), value), exp.get<unsigned>()});
  }
  return LayeredPoly(std::move(out));
}

}  // namespace layered
