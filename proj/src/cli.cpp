#include "layered/cli.hpp"

#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "layered/error.hpp"
#include "layered/json_io.hpp"

namespace layered {

namespace {

struct Options {
  bool json = false;
  bool notes = false;
  unsigned bound = 8;
  std::string session_path;
  std::vector<std::string> lets;
  std::string save;
  std::string descriptor;  // eval only
  bool sample = false;     // kernel only
  std::string h;           // kernel --sample only
  std::vector<std::string> inputs;
};

struct Outcome {
  Json result;
  std::vector<std::string> notes;
  Json saved;  // what --save binds
};

// Named JSON values plus the command log, persisted in the session file.
class Session {
 public:
  void load(const std::string& path) {
    path_ = path;
    std::ifstream f(path);
    if (!f) return;  // a new session
    std::stringstream buf;
    buf << f.rdbuf();
    Json j = parse_json(buf.str());
    if (j.contains("bindings")) {
      if (!j["bindings"].is_object()) throw Error(Errc::ParseError, "session bindings must be an object");
      for (const auto& [name, value] : j["bindings"].items()) bindings_[name] = value;
    }
    if (j.contains("log")) log_ = j["log"];
  }

  void bind(const std::string& name, Json value) {
    if (name.empty()) throw Error(Errc::ParseError, "binding names must be non-empty");
    if (bindings_.count(name)) throw Error(Errc::DuplicateBinding, "\"" + name + "\" is already bound");
    bindings_[name] = std::move(value);
  }
  bool has(const std::string& name) const { return bindings_.count(name) > 0; }

  const Json& lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) throw Error(Errc::UnknownBinding, "no binding named \"" + name + "\"");
    return it->second;
  }

  void record(const std::string& command, const std::vector<std::string>& args, bool ok) {
    log_.push_back({{"command", command}, {"args", args}, {"ok", ok}});
  }

  void save() const {
    if (path_.empty()) return;
    Json bindings = Json::object();
    for (const auto& [name, value] : bindings_) bindings[name] = value;
    std::ofstream f(path_);
    f << Json{{"bindings", bindings}, {"log", log_}}.dump(2) << "\n";
  }

 private:
  std::string path_;
  std::map<std::string, Json> bindings_;
  Json log_ = Json::array();
};

class Inputs {
 public:
  Inputs(const Session& s, std::istream& in) : session_(s), in_(in) {}

  /// "-" reads stdin, "@name" a session binding, an existing path its file;
  /// anything else is inline JSON (when it starts with { or [) or text.
  Json resolve(const std::string& arg) {
    if (arg == "-") {
      if (stdin_used_) throw Error(Errc::ParseError, "standard input can be read only once");
      stdin_used_ = true;
      std::stringstream buf;
      buf << in_.rdbuf();
      return parse_json(buf.str());
    }
    if (!arg.empty() && arg[0] == '@') return session_.lookup(arg.substr(1));
    std::ifstream f(arg);
    if (f) {
      std::stringstream buf;
      buf << f.rdbuf();
      return parse_json(buf.str());
    }
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json")
      throw Error(Errc::ParseError, "cannot read file " + arg);
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return parse_json(arg);
    return Json(arg);
  }

 private:
  const Session& session_;
  std::istream& in_;
  bool stdin_used_ = false;
};

Json degree_json(const Degree& d) { return to_json(d); }

Outcome cmd_decompose(Inputs& io, const Options& o) {
  BipotentPresentation p = presentation_from_json(io.resolve(o.inputs.at(0)), "presentation");
  ExponentLattice lattice = exponent_lattice(p);
  ExtDecomposition d = decompose_extension(p);

  Json lattice_rows = Json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Json row = Json::array();
    for (const auto& k : lattice.basis().row(i)) row.push_back(to_json(k));
    lattice_rows.push_back({{"exps", row}, {"beta", to_json(lattice.values()[i])}});
  }
  auto vec = [](const IntVector& v) {
    Json a = Json::array();
    for (const auto& k : v) a.push_back(to_json(k));
    return a;
  };
  Json free = Json::array();
  for (const auto& m : d.free_monomials) free.push_back({{"exps", vec(m)}, {"value", to_json(p.monomial_value(m))}});
  Json torsion = Json::array();
  Json orders = Json::array();
  for (const auto& t : d.torsion) {
    Json entry{{"exps", vec(t.exps)}, {"order", to_json(t.order)}, {"value", to_json(p.monomial_value(t.exps))}};
    if (t.representative) entry["representative"] = to_json(*t.representative);
    torsion.push_back(entry);
    orders.push_back(to_json(t.order));
  }
  Json gens = Json::array();
  for (const auto& g : d.generators)
    gens.push_back({{"beta", to_json(g.beta)}, {"free", vec(g.free_coeffs)}, {"torsion", vec(g.torsion_coeffs)}});
  Json factors = Json::array();
  for (const auto& f : d.smith.invariant_factors) factors.push_back(to_json(f));

  Outcome out;
  out.result = {{"free_rank", d.free_rank},
                {"torsion_orders", orders},
                {"rank", degree_json(d.rank())},
                {"invariant_factors", factors},
                {"lattice", lattice_rows},
                {"free_monomials", free},
                {"torsion_monomials", torsion},
                {"generators", gens}};
  out.notes = {
      "lattice: exponent vectors k with sum k_i a_i in the base, Hermite-reduced, with the base value of each row",
      "invariant_factors: Smith normal form of the lattice basis; free_rank = generators - lattice rank",
      "torsion_monomials: Smith basis vectors with invariant factor > 1; representative is the coset value in "
      "[0, base unit)",
      "generators: a_i = beta + sum free[j] * b_j + sum torsion[j] * c_j",
      "rank: product of the torsion orders, infinite when free_rank > 0"};
  out.saved = to_json(p);
  return out;
}

Outcome cmd_eval(Inputs& io, const Options& o) {
  LayeredPoly f = layered_poly_from_json(io.resolve(o.inputs.at(0)), "poly");
  ExtScalar a = scalar_from_json(io.resolve(o.inputs.at(1)), "scalar");
  Outcome out;
  if (!o.descriptor.empty()) {
    UniformDescriptor d = descriptor_from_json(io.resolve(o.descriptor), "descriptor");
    if (!layer_in_sort(d.sort, a.layer))
      throw Error(Errc::DescriptorMismatch, "layer " + to_string(a.layer) + " is not in " + to_string(d.sort));
    if (!contains_value(d.value, a.value))
      throw Error(Errc::DescriptorMismatch, "value " + to_string(a.value) + " is not in the value group");
    out.notes.push_back("descriptor: the scalar's layer and value both lie in the given extension");
  }
  Evaluation e = eval_layered_poly(f, a);
  Json essential = Json::array();
  for (std::size_t j : essential_indices(f, a)) essential.push_back(f.terms()[j].exp);
  out.result = {{"layer", to_json(e.layer)}, {"value", to_json(e.value)}, {"essential", essential}};
  out.notes.push_back("value: maximum over terms of nu(alpha_i) + i * nu(a)");
  out.notes.push_back("essential: exponents of the terms attaining the maximum");
  out.notes.push_back("layer: sum of s(alpha_j) * s(a)^j over the essential terms");
  out.saved = out.result;
  return out;
}

Outcome cmd_closure(Inputs& io, const Options& o) {
  UniformDescriptor h = descriptor_from_json(io.resolve(o.inputs.at(0)), "descriptor");
  ExtScalar a = scalar_from_json(io.resolve(o.inputs.at(1)), "scalar");
  UniformDescriptor c = uniform_closure(h, a);
  LayersetReport ls = is_layerset_semiring(h, a, o.bound);
  Json layerset{{"semiring", ls.semiring},
                {"realizable_pairs", ls.realizable_pairs},
                {"checked_pairs", ls.checked_pairs},
                {"bound", o.bound}};
  if (ls.witness) layerset["witness"] = Json::array({ls.witness->first, ls.witness->second});
  Outcome out;
  out.result = {{"descriptor", to_json(c)},
                {"text", to_string(c)},
                {"semifield", is_uniform_semifield(c)},
                {"layerset_semiring", layerset}};
  out.notes = {"descriptor: values extended by nu(a), then layers extended by s(a); the two orders agree",
               "semifield: value part all torsion and sort part a semifield",
               "layerset_semiring: the layers of H[a] form a semiring iff nu(a) lies in G(H); pairs (i, j) count "
               "powers of a whose values can be tied"};
  out.saved = out.result["descriptor"];
  return out;
}

Outcome cmd_kernel(Inputs& io, const Options& o) {
  Outcome out;
  if (o.sample) {
    PosPoly g1 = pos_poly_from_json(io.resolve(o.inputs.at(0)), "g1");
    std::optional<PosPoly> g2, h;
    std::size_t next = 1;
    if (o.inputs.size() == 3) g2 = pos_poly_from_json(io.resolve(o.inputs.at(next++)), "g2");
    if (!o.h.empty()) h = pos_poly_from_json(io.resolve(o.h), "h");
    GeneratorRef gen = generator_from_json(io.resolve(o.inputs.at(next)), "generator");
    PosRationalFunction r = kernel_sample(g1, g2, h, *gen);
    out.result = {{"sample", to_json(r)}, {"text", to_string(r)}, {"contains", in_kernel(r, *gen)}};
    out.notes = {"sample: (m+ g1 + m- g2 + h (g1 + g2)) / (m+ g2 + m- g1 + h (g1 + g2)); absent terms dropped",
                 "contains: numerator - denominator = m (g1 - g2) is divisible by m"};
  } else {
    if (o.inputs.size() != 3) throw Error(Errc::ParseError, "kernel expects A B GENERATOR");
    PosPoly a = pos_poly_from_json(io.resolve(o.inputs[0]), "a");
    PosPoly b = pos_poly_from_json(io.resolve(o.inputs[1]), "b");
    GeneratorRef gen = generator_from_json(io.resolve(o.inputs[2]), "generator");
    SignedPoly rem = (a.poly() - b.poly()) % gen->minimal_polynomial();
    out.result = {{"contains", rem.is_zero()}, {"remainder", to_json(rem)}};
    out.notes = {"contains: a/b lies in the kernel of x -> d iff m divides a - b"};
  }
  out.saved = out.result;
  return out;
}

Outcome cmd_semifield(Inputs& io, const Options& o) {
  UniformDescriptor h = descriptor_from_json(io.resolve(o.inputs.at(0)), "descriptor");
  bool value_part = is_bipotent_semifield(h.value);
  bool sort_part = !std::holds_alternative<FreeSort>(h.sort) || std::get<FreeSort>(h.sort).fractions;
  Outcome out;
  out.result = {{"semifield", is_uniform_semifield(h)},
                {"value_part", value_part},
                {"sort_part", sort_part},
                {"text", to_string(h)}};
  out.notes = {"value_part: every generator is torsion over the base (free rank 0)",
               "sort_part: Q>0 and Q>0[d] are semifields; a free sort needs fractions"};
  out.saved = out.result;
  return out;
}

Outcome cmd_torsion_degree(Inputs& io, const Options& o) {
  BipotentPresentation p = presentation_from_json(io.resolve(o.inputs.at(0)), "presentation");
  ValueExpr v = value_from_json(io.resolve(o.inputs.at(1)), "element");
  Degree d = torsion_degree(p, v);
  Outcome out;
  out.result = {{"degree", to_json(d)},
                {"in_value_group", contains_value(p, v)},
                {"torsion", d.is_finite()}};
  out.notes = {"degree: least k >= 1 with k * element in the base, from the order of its class in Z^n / lattice"};
  std::vector<std::size_t> all(p.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto w = divisible_dependence_witness(p, v, all);
  if (w && w->k == 1) {
    // v = beta + sum e_i a_i; is v^-1 a monomial with natural exponents?
    IntVector inverse(w->exps.size());
    for (std::size_t i = 0; i < inverse.size(); ++i) inverse[i] = -w->exps[i];
    out.result["inverse_in_monoid"] = monoid_contains(p, inverse, o.bound);
    out.notes.push_back("inverse_in_monoid: whether -element equals beta + sum j_i a_i with 0 <= j_i <= bound");
  }
  out.saved = out.result;
  return out;
}

Outcome cmd_rank(Inputs& io, const Options& o) {
  BipotentPresentation p = presentation_from_json(io.resolve(o.inputs.at(0)), "presentation");
  Outcome out;
  if (o.inputs.size() > 1) {
    BipotentPresentation sub = presentation_from_json(io.resolve(o.inputs[1]), "sub");
    Degree over_sub = extension_rank(p, sub);
    Degree sub_over_base = extension_rank(sub);
    out.result = {{"rank", to_json(over_sub)}, {"sub_rank", to_json(sub_over_base)}, {"total_rank", to_json(extension_rank(p))}};
    out.notes = {"rank: index of K* in D* for K generated by the sub-presentation",
                 "total_rank = rank * sub_rank"};
  } else {
    out.result = {{"rank", to_json(extension_rank(p))}};
    out.notes = {"rank: order of Z^n / lattice, infinite when the lattice has rank < n"};
  }
  out.saved = out.result;
  return out;
}

void print_human(std::ostream& out, const Json& result, const std::string& indent = "") {
  for (const auto& [key, value] : result.items()) {
    if (value.is_object() && key != "descriptor" && key != "sample" && key != "remainder") {
      out << indent << key << ":\n";
      print_human(out, value, indent + "  ");
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Layered semifield extensions: decomposition, evaluation, closures and kernels", "layered"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_flag("--notes", o.notes, "Include notes on how each result field is derived");
  app.add_option("--bound", o.bound, "Search bound for bounded scans")->capture_default_str();
  app.add_option("--session", o.session_path, "Session file with named bindings and a command log");
  app.add_option("--let", o.lets, "Bind NAME=INPUT in the session before running")->take_all();
  app.add_option("--save", o.save, "Bind the command's result to NAME in the session");

  using Handler = std::function<Outcome(Inputs&, const Options&)>;
  std::map<std::string, Handler> handlers;
  // One string positional per input: a vector positional would split inline
  // JSON arrays such as [1,2] into separate values.
  std::array<std::string, 3> slots;
  std::vector<CLI::Option*> slot_options;
  auto add = [&](const char* name, const char* help, Handler h, std::size_t min_inputs,
                 std::vector<const char*> input_names) {
    CLI::App* sub = app.add_subcommand(name, help);
    for (std::size_t i = 0; i < input_names.size(); ++i) {
      auto* opt = sub->add_option(input_names[i], slots[i], "A file, '-' for stdin, @binding, or inline text")
                      ->required(i < min_inputs);
      slot_options.push_back(opt);
    }
    handlers[name] = std::move(h);
    return sub;
  };
  add("decompose", "Free and torsion parts of a bipotent extension", cmd_decompose, 1, {"presentation"});
  CLI::App* eval = add("eval", "Evaluate a layered polynomial at a scalar", cmd_eval, 2, {"poly", "scalar"});
  eval->add_option("--descriptor", o.descriptor, "Check that the scalar lies in this extension");
  add("closure", "Uniform closure of a descriptor by a scalar", cmd_closure, 2, {"descriptor", "scalar"});
  CLI::App* kernel = add("kernel", "Kernel membership a/b or a kernel sample", cmd_kernel, 2, {"first", "second", "third"});
  kernel->add_flag("--sample", o.sample, "Build the kernel element from G1 [G2] GENERATOR");
  kernel->add_option("--shared", o.h, "Shared term h for --sample");
  add("semifield", "Semifield test for a descriptor", cmd_semifield, 1, {"descriptor"});
  add("torsion-degree", "Torsion degree of a value over a presentation", cmd_torsion_degree, 2, {"presentation", "element"});
  add("rank", "Extension rank [D : H] or [D : K]", cmd_rank, 1, {"presentation", "sub"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  for (const auto* opt : slot_options)
    if (opt->count() > 0) o.inputs.push_back(opt->as<std::string>());

  Session session;
  Json report{{"command", command}, {"args", o.inputs}};
  try {
    if (!o.session_path.empty()) session.load(o.session_path);
    Inputs io(session, in);
    for (const auto& let : o.lets) {
      auto eq = let.find('=');
      if (eq == std::string::npos) throw Error(Errc::ParseError, "--let expects NAME=INPUT, got " + let);
      session.bind(let.substr(0, eq), io.resolve(let.substr(eq + 1)));
    }
    if (!o.save.empty() && session.has(o.save))
      throw Error(Errc::DuplicateBinding, "\"" + o.save + "\" is already bound");

    Outcome result = handlers.at(command)(io, o);
    report["result"] = result.result;
    if (o.notes) report["notes"] = result.notes;
    if (!o.save.empty()) session.bind(o.save, result.saved);
    session.record(command, o.inputs, true);
    session.save();
  } catch (const Error& e) {
    session.record(command, o.inputs, false);
    try {
      session.save();
    } catch (...) {
    }
    if (o.json) {
      report["error"] = {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
      out << report.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  }

  if (o.json) {
    out << report.dump(2) << "\n";
  } else {
    out << command << "\n";
    print_human(out, report["result"], "  ");
    if (o.notes) {
      out << "notes:\n";
      for (const auto& n : report["notes"]) out << "  - " << n.get<std::string>() << "\n";
    }
  }
  return 0;
}

}  // namespace layered
