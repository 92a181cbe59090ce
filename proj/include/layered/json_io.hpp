#pragma once

// JSON forms of the library's objects. Rationals are strings "p/q" (plain
// JSON integers are accepted on input); small integers are numbers.
//
//   presentation  {"base": ["1"], "generators": [{"num": "1/2"}, {"sym": "g"}],
//                  "relations": [{"exps": [2, 0], "beta": "1"}]}
//   polynomial    {"poly": {"2": "1", "0": "-2"}}, a bare degree map, or text "x^2 - 2"
//   generator     {"m": <polynomial>, "interval": ["1", "2"]}
//   descriptor    {"sort": {"kind": "base" | "algebraic" | "free", ...}, "value": <presentation>}
//   layered poly  [{"layer": "1", "value": "0", "exp": 2}, ...]
//   scalar        {"layer": <layer>, "value": "1/2 + g"}
//   layer         "3" | {"m", "interval", "coeffs"} | {"free": "t", "num": <polynomial>, "den": <polynomial>}
//
// Shape errors raise ParseError naming the offending path.

#include <string>
#include <string_view>

#include "json.hpp"
#include "layered/bipotent.hpp"
#include "layered/cancellative.hpp"
#include "layered/uniform.hpp"

namespace layered {

using Json = nlohmann::ordered_json;

/// Parses text, reporting the byte offset of a syntax error.
Json parse_json(std::string_view text);

Json to_json(const Rational& q);
/// A number when it fits in a long, a string otherwise.
Json to_json(const Integer& z);
Json to_json(const Degree& d);
Json to_json(const ValueExpr& v);
Json to_json(const SignedPoly& p);
Json to_json(const AlgebraicGenerator& g);
Json to_json(const BipotentPresentation& p);
Json to_json(const SortPart& s);
Json to_json(const UniformDescriptor& d);
Json to_json(const SortElem& layer);
Json to_json(const ExtScalar& a);
Json to_json(const LayeredPoly& f);
Json to_json(const PosRationalFunction& r);

Rational rational_from_json(const Json& j, const std::string& path);
Integer integer_from_json(const Json& j, const std::string& path);
ValueExpr value_from_json(const Json& j, const std::string& path);
SignedPoly poly_from_json(const Json& j, const std::string& path, std::string_view var = "x");
PosPoly pos_poly_from_json(const Json& j, const std::string& path, std::string_view var = "x");
GeneratorRef generator_from_json(const Json& j, const std::string& path);
BipotentPresentation presentation_from_json(const Json& j, const std::string& path);
UniformDescriptor descriptor_from_json(const Json& j, const std::string& path);
SortElem layer_from_json(const Json& j, const std::string& path);
ExtScalar scalar_from_json(const Json& j, const std::string& path);
LayeredPoly layered_poly_from_json(const Json& j, const std::string& path);

}  // namespace layered
