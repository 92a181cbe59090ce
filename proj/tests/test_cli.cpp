#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "layered/cli.hpp"
#include "layered/error.hpp"
#include "layered/json_io.hpp"

using namespace layered;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return parse_json(out); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(LAYERED_SAMPLES) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

// A fresh session path, removed on destruction.
struct TempSession {
  std::filesystem::path path;
  explicit TempSession(const std::string& tag)
      : path(std::filesystem::temp_directory_path() / ("layered_cli_" + tag + ".json")) {
    std::filesystem::remove(path);
  }
  ~TempSession() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("decompose Z[1/2, 1/3]") {
  auto r = run({"--json", "decompose", sample("z_half_third.json")});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["command"] == "decompose");
  CHECK(j["result"]["free_rank"] == 0);
  CHECK(j["result"]["torsion_orders"] == Json::parse("[6]"));
  CHECK(j["result"]["rank"] == 6);
  // generators rebuilt from beta and the torsion monomial value
  Rational t = rational_from_json(j["result"]["torsion_monomials"][0]["value"], "t");
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& g = j["result"]["generators"][i];
    Rational v = rational_from_json(g["beta"], "beta") + integer_from_json(g["torsion"][0], "c") * t;
    CHECK(v == Rational(1, static_cast<long>(i + 2)));
  }
}

TEST_CASE("decompose Z[g] is free of rank one") {
  auto j = run({"--json", "decompose", sample("z_g.json")}).json();
  CHECK(j["result"]["free_rank"] == 1);
  CHECK(j["result"]["torsion_orders"] == Json::array());
  CHECK(j["result"]["rank"] == "infinite");
}

TEST_CASE("malformed JSON reports its position") {
  auto r = run({"decompose", "{\"base\": [\"1\"], "});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("ParseError") != std::string::npos);
  CHECK(r.err.find("at byte") != std::string::npos);
  // input ends after 11 bytes; the error points just past it
  auto j = run({"--json", "decompose", "{\"base\": [1"}).json();
  CHECK(j["error"]["code"] == "ParseError");
  CHECK(j["error"]["message"].get<std::string>().find("byte 12") != std::string::npos);
  // a missing file is also a parse error, not inline text
  CHECK(run({"--json", "decompose", "no_such_file.json"}).json()["error"]["code"] == "ParseError");
}

TEST_CASE("schema errors carry the path") {
  auto j = run({"--json", "decompose", R"({"base": ["1"], "generators": [{"num": "x/"}]})"}).json();
  CHECK(j["error"]["code"] == "ParseError");
  CHECK(j["error"]["message"].get<std::string>().find("generators[0]") != std::string::npos);
}

TEST_CASE("eval the 13-layer example") {
  auto j = run({"--json", "eval", sample("one_x_x2.json"), sample("layer3.json")}).json();
  CHECK(j["result"]["layer"] == "13");
  CHECK(j["result"]["value"] == "0");
  CHECK(j["result"]["essential"] == Json::parse("[0, 1, 2]"));
}

TEST_CASE("eval a constant polynomial echoes the constant") {
  auto j = run({"--json", "eval", R"([{"layer": "2", "value": "5", "exp": 0}])", sample("layer3.json")}).json();
  CHECK(j["result"]["layer"] == "2");
  CHECK(j["result"]["value"] == "5");
  CHECK(j["result"]["essential"] == Json::parse("[0]"));
}

TEST_CASE("eval against a mismatched descriptor") {
  auto r = run({"--json", "eval", sample("one_x_x2.json"), sample("sqrt2_half.json"), "--descriptor",
                sample("base_z.json")});
  CHECK(r.code == 1);
  CHECK(r.json()["error"]["code"] == "DescriptorMismatch");
  auto ok = run({"eval", sample("one_x_x2.json"), sample("layer3.json"), "--descriptor", sample("base_z.json")});
  CHECK(ok.code == 0);
}

TEST_CASE("closure of (sqrt2, 1/2)") {
  auto r = run({"--json", "closure", sample("base_z.json"), sample("sqrt2_half.json")});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["result"]["semifield"] == true);
  auto d = descriptor_from_json(j["result"]["descriptor"], "descriptor");
  auto sqrt2 = generator_from_json(parse_json(read_file(sample("sqrt2.json"))), "g");
  auto want = UniformDescriptor{AlgebraicSort{sqrt2},
                                BipotentPresentation(ValueLattice::integers(), {ValueExpr(Rational(1, 2))})};
  CHECK(d == want);
  // the payload re-parses into the same value
  CHECK(to_json(d).dump() == j["result"]["descriptor"].dump());
  CHECK(j["result"]["layerset_semiring"]["semiring"] == false);
}

TEST_CASE("kernel membership") {
  auto j = run({"--json", "kernel", "x^2", "2", sample("sqrt2.json")}).json();
  CHECK(j["result"]["contains"] == true);
  j = run({"--json", "kernel", "x^2 + 1", "2", sample("sqrt2.json")}).json();
  CHECK(j["result"]["contains"] == false);
  auto rem = poly_from_json(j["result"]["remainder"], "remainder");
  CHECK(rem == SignedPoly(Rational(1)));
  CHECK(to_json(rem).dump() == j["result"]["remainder"].dump());
}

TEST_CASE("kernel samples lie in the kernel") {
  auto j = run({"--json", "kernel", "--sample", "1+x", "x", sample("sqrt2.json"), "--shared", "2"}).json();
  CHECK(j["result"]["contains"] == true);
  CHECK(j["result"]["text"] == "(x^3 + x^2 + 6*x + 2)/(x^3 + 6*x + 4)");
  const auto& s = j["result"]["sample"];
  auto num = pos_poly_from_json(s["num"], "num"), den = pos_poly_from_json(s["den"], "den");
  auto g = generator_from_json(parse_json(read_file(sample("sqrt2.json"))), "g");
  CHECK(kernel_contains(num, den, *g));
  CHECK(to_json(PosRationalFunction(num, den)).dump() == s.dump());
}

TEST_CASE("semifield of Q>0 (.) Z[g] is false") {
  auto j = run({"--json", "semifield", sample("base_z_g.json")}).json();
  CHECK(j["result"]["semifield"] == false);
  CHECK(run({"--json", "semifield", sample("base_z.json")}).json()["result"]["semifield"] == true);
}

TEST_CASE("torsion degree and rank") {
  auto j = run({"--json", "torsion-degree", sample("z_half.json"), "1/6"}).json();
  CHECK(j["result"]["degree"] == 6);
  CHECK(j["result"]["in_value_group"] == false);
  j = run({"--json", "rank", sample("z_sixth.json"), sample("z_half.json")}).json();
  CHECK(j["result"]["rank"] == 3);
  CHECK(j["result"]["sub_rank"] == 2);
  CHECK(j["result"]["total_rank"] == 6);
  CHECK(run({"--json", "rank", sample("z_half.json"), sample("z_sixth.json")}).json()["error"]["code"] ==
        "NotASubextension");
}

TEST_CASE("stdin input") {
  auto r = run({"--json", "decompose", "-"}, read_file(sample("z_half_third.json")));
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["rank"] == 6);
}

TEST_CASE("exit code is zero iff there is no error") {
  CHECK(run({"semifield", sample("base_z.json")}).code == 0);
  CHECK(run({"semifield", "{}"}).code != 0);
  CHECK(run({"decompose"}).code != 0);  // missing argument
  CHECK(run({"frobnicate"}).code != 0);
}

TEST_CASE("reports are machine-parseable and deterministic") {
  std::vector<std::vector<std::string>> commands{
      {"--json", "--notes", "decompose", sample("z_half_g.json")},
      {"--json", "--notes", "eval", sample("one_x_x2.json"), sample("layer3.json")},
      {"--json", "--notes", "closure", sample("base_z.json"), sample("sqrt2_half.json")},
      {"--json", "--notes", "kernel", "x^2", "2", sample("sqrt2.json")},
      {"--json", "--notes", "semifield", sample("base_z_g.json")},
      {"--json", "--notes", "torsion-degree", sample("z_half.json"), "1/6"},
      {"--json", "--notes", "rank", sample("z_sixth.json"), sample("z_half.json")},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    CAPTURE(c[2]);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = a.json();
    CHECK(j.dump(2) + "\n" == a.out);
    CHECK(j.contains("command"));
    CHECK(j.contains("args"));
    CHECK(j.contains("result"));
    CHECK(j["notes"].is_array());
    // human output is deterministic too
    std::vector<std::string> plain(c.begin() + 2, c.end());
    CHECK(run(plain).out == run(plain).out);
  }
}

TEST_CASE("session bindings") {
  TempSession s("bindings");
  auto r = run({"--session", s.str(), "--let", "h=" + sample("base_z.json"), "--save", "c", "closure", "@h",
                sample("sqrt2_half.json")});
  REQUIRE(r.code == 0);
  auto session = parse_json(read_file(s.str()));
  CHECK(session["bindings"].contains("h"));
  CHECK(session["bindings"].contains("c"));
  CHECK(session["log"].size() == 1);

  // a saved closure can be used as the next descriptor
  auto j = run({"--json", "--session", s.str(), "semifield", "@c"}).json();
  CHECK(j["result"]["semifield"] == true);

  // bindings are immutable
  auto dup = run({"--json", "--session", s.str(), "--let", "h=" + sample("base_z_g.json"), "semifield", "@h"});
  CHECK(dup.code == 1);
  CHECK(dup.json()["error"]["code"] == "DuplicateBinding");
  auto dup_save = run({"--json", "--session", s.str(), "--save", "c", "semifield", "@h"});
  CHECK(dup_save.json()["error"]["code"] == "DuplicateBinding");

  auto unknown = run({"--json", "--session", s.str(), "semifield", "@nope"});
  CHECK(unknown.json()["error"]["code"] == "UnknownBinding");

  // failed commands are logged as well
  session = parse_json(read_file(s.str()));
  CHECK(session["log"].size() == 5);
  CHECK(session["log"].back()["ok"] == false);
  CHECK(session["bindings"]["h"] == parse_json(read_file(sample("base_z.json"))));
}
