// nichols: command-line front end for the Rep(K_m) / Rep(DK1) library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nichols/errors.hpp"
#include "nichols/expr.hpp"
#include "nichols/verify.hpp"

using namespace nichols;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::string algebra = "K2";
  bool json_out = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("bad JSON in '" + path + "': " + e.what());
  }
}

AlgebraPtr algebra(const Globals& g) {
  try {
    return algebra_by_name(g.algebra);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// Prints either the plain text or the JSON envelope.
void emit(const Globals& g, const std::string& command, const json& inputs, const json& result,
          const std::string& text, const std::optional<bool>& agreement = std::nullopt) {
  if (g.json_out) {
    json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["result"] = result;
    if (agreement) out["agreement"] = *agreement;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

std::vector<Eta> parse_etas(const std::string& list) {
  std::vector<Eta> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(Eta::parse(tok));
  if (out.empty()) throw UsageError("--etas needs at least one value");
  return out;
}

int cmd_fuse(const Globals& g, const std::string& text) {
  auto alg = algebra(g);
  ExprPtr e = parse_expr(text);
  GreenElement orc = GreenElement::from_labels(identify(eval_module(*e, alg)));
  GreenElement cf = eval_green(*e, *alg);
  bool agree = orc == cf;
  std::string out = orc.to_string() + "\n";
  if (!agree) out += "closed form disagrees: " + cf.to_string() + "\n";
  json res = {{"oracle", to_json(orc)}, {"closed_form", to_json(cf)}};
  emit(g, "fuse", {{"algebra", alg->name}, {"expr", print_expr(*e)}}, res, out, agree);
  return agree ? kOk : kFail;
}

int cmd_identify(const Globals& g, const std::string& path) {
  Module m;
  try {
    m = module_from_json(read_json_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  GreenElement labels = GreenElement::from_labels(identify(m));
  emit(g, "identify", {{"file", path}, {"algebra", m.alg->name}, {"dim", m.dim}}, to_json(labels), labels.to_string());
  return kOk;
}

int cmd_green_mul(const Globals& g, const std::string& text) {
  auto alg = algebra(g);
  ExprPtr e = parse_expr(text);
  GreenElement x = eval_green(*e, *alg);
  emit(g, "green-mul", {{"algebra", alg->name}, {"expr", print_expr(*e)}}, to_json(x), x.to_string());
  return kOk;
}

int cmd_ideal_closure(const Globals& g, const std::vector<std::string>& labels) {
  auto alg = algebra(g);
  std::vector<Label> gens;
  for (const auto& s : labels) {
    Label l = Label::parse(s);
    validate_label(l, *alg);
    gens.push_back(l);
  }
  IdealSpec spec = ideal_closure(gens);
  emit(g, "ideal closure", {{"algebra", alg->name}, {"generators", labels}}, to_json(spec), spec.to_string());
  return kOk;
}

int cmd_ideal_contains(const Globals& g, const std::string& path, const std::string& text) {
  auto alg = algebra(g);
  IdealSpec spec;
  try {
    spec = ideal_from_json(read_json_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  ExprPtr e = parse_expr(text);
  GreenElement x = eval_green(*e, *alg);
  bool in = false;
  try {
    in = ideal_contains(spec, x);
  } catch (const NegativeCoefficient& err) {
    throw UsageError(err.what());
  }
  emit(g, "ideal contains", {{"spec", to_json(spec)}, {"expr", print_expr(*e)}}, in, in ? "true" : "false");
  return kOk;
}

int cmd_negligible(const Globals& g, const std::string& text) {
  auto alg = algebra(g);
  ExprPtr e = parse_expr(text);
  bool n = is_negligible(eval_module(*e, alg));
  emit(g, "negligible", {{"algebra", alg->name}, {"expr", print_expr(*e)}}, n, n ? "true" : "false");
  return kOk;
}

int cmd_qdim(const Globals& g, const std::string& text) {
  auto alg = algebra(g);
  ExprPtr e = parse_expr(text);
  Rat q = qdim(eval_module(*e, alg));
  emit(g, "qdim", {{"algebra", alg->name}, {"expr", print_expr(*e)}}, to_json(q), q.to_string());
  return kOk;
}

int cmd_auslander(const Globals& g, int m) {
  AuslanderReport rep;
  try {
    rep = verify_auslander_iso(m);
  } catch (const OutOfRange& e) {
    throw UsageError(e.what());
  }
  std::ostringstream os;
  os << "projective Auslander algebra of K" << m << ": dim " << rep.dim_A << ", dim K" << m << " = " << rep.dim_Km
     << "\n";
  json checks = json::array();
  for (const auto& [name, ok] : rep.checks) {
    os << "[" << (ok ? "PASS" : "FAIL") << "] " << name << "\n";
    checks.push_back({{"check", name}, {"pass", ok}});
  }
  os << (rep.pass() ? "isomorphism verified" : "isomorphism NOT verified") << "\n";
  json res = {{"dim_A", rep.dim_A}, {"dim_Km", rep.dim_Km}, {"hom_dims", rep.hom_dims}, {"checks", checks},
              {"pass", rep.pass()}};
  emit(g, "auslander", {{"m", m}}, res, os.str());
  return rep.pass() ? kOk : kFail;
}

int cmd_verify(const Globals& g, const std::string& suite, const VerifyOptions& opts) {
  auto reports = run_suites(suite, opts);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();
  json inputs = {{"suite", suite}, {"max_s", opts.max_s}, {"max_n", opts.max_n}};
  json etas = json::array();
  for (const auto& e : opts.etas) etas.push_back(e.to_string());
  inputs["etas"] = etas;
  emit(g, "verify", inputs, report_json(reports), report_text(reports));
  return ok ? kOk : kFail;
}

int cmd_export(const Globals& g, const std::string& what) {
  auto alg = algebra(g);
  if (what == "algebra") {
    json a = algebra_to_json(*alg);
    emit(g, "export", {{"what", what}, {"algebra", alg->name}}, a, a.dump(2));
  } else {
    json s = skeleton_to_json(build_skeleton(alg));
    emit(g, "export", {{"what", what}, {"algebra", alg->name}}, s, s.dump(2));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations of K_m and DK1: fusion, Green rings, tensor ideals"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--algebra", g.algebra, "K2 (default), DK1, or K<m>")->capture_default_str();
  app.add_flag("--json", g.json_out, "machine-readable output");

  std::string expr_text, file, spec_file, suite = "all", etas_text, what;
  std::vector<std::string> labels;
  int m = 2;
  VerifyOptions vopt;

  auto* fuse = app.add_subcommand("fuse", "decompose a tensor expression (oracle and closed form)");
  fuse->add_option("expr", expr_text)->required();
  auto* ident = app.add_subcommand("identify", "identify the summands of a module given as JSON");
  ident->add_option("file", file)->required();
  auto* gmul = app.add_subcommand("green-mul", "evaluate an expression in the Green ring (closed form)");
  gmul->add_option("expr", expr_text)->required();
  auto* ideal = app.add_subcommand("ideal", "tensor ideals of Rep(K2)");
  ideal->require_subcommand(1);
  auto* closure = ideal->add_subcommand("closure", "smallest tensor ideal containing the labels");
  closure->add_option("labels", labels);
  auto* contains = ideal->add_subcommand("contains", "membership of an expression in an ideal");
  contains->add_option("spec", spec_file, "IdealSpec JSON file")->required();
  contains->add_option("expr", expr_text)->required();
  auto* negl = app.add_subcommand("negligible", "is the module negligible");
  negl->add_option("expr", expr_text)->required();
  auto* qd = app.add_subcommand("qdim", "quantum dimension trace(rho(pivot))");
  qd->add_option("expr", expr_text)->required();
  auto* ausl = app.add_subcommand("auslander", "verify End(P(0) + P(1)) = K_m");
  ausl->add_option("m", m)->required();
  auto* ver = app.add_subcommand("verify", "rerun the verification suites");
  ver->add_option("--suite", suite, "hopf|fusion|greenring|ideals|auslander|lemma|all")->capture_default_str();
  ver->add_option("--max-s", vopt.max_s)->check(CLI::Range(1, 8))->capture_default_str();
  ver->add_option("--max-n", vopt.max_n)->check(CLI::Range(1, 8))->capture_default_str();
  ver->add_option("--etas", etas_text, "comma-separated list, e.g. 0,1,-1,2/3,5/7,inf");
  auto* exp = app.add_subcommand("export", "dump the algebra or its projective skeleton as JSON");
  exp->add_option("what", what)->required()->check(CLI::IsMember({"algebra", "skeleton"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*fuse) return cmd_fuse(g, expr_text);
    if (*ident) return cmd_identify(g, file);
    if (*gmul) return cmd_green_mul(g, expr_text);
    if (*closure) return cmd_ideal_closure(g, labels);
    if (*contains) return cmd_ideal_contains(g, spec_file, expr_text);
    if (*negl) return cmd_negligible(g, expr_text);
    if (*qd) return cmd_qdim(g, expr_text);
    if (*ausl) return cmd_auslander(g, m);
    if (*ver) {
      if (!etas_text.empty()) vopt.etas = parse_etas(etas_text);
      return cmd_verify(g, suite, vopt);
    }
    if (*exp) return cmd_export(g, what);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidLabel& e) {
    std::cerr << "invalid label: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
