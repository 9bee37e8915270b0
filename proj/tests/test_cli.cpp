#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "nichols/errors.hpp"
#include "nichols/expr.hpp"
#include "nichols/json_io.hpp"

using namespace nichols;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(NICHOLS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(NICHOLS_EXAMPLES) + "/" + name; }

Label L(const char* s) { return Label::parse(s); }

ExprPtr atom(const char* s) {
  auto e = std::make_shared<Expr>();
  e->label = L(s);
  return e;
}
ExprPtr node(Expr::Kind k, ExprPtr a, ExprPtr b = nullptr, long long f = 0) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  e->factor = f;
  return e;
}

}  // namespace

TEST_CASE("parser shapes") {
  CHECK(*parse_expr("P(0)*M(2,1,2/3)") == *node(Expr::Kind::Tensor, atom("P(0)"), atom("M(2,1,2/3)")));
  CHECK(*parse_expr("V(0)+2*P(1)") ==
        *node(Expr::Kind::Sum, atom("V(0)"), node(Expr::Kind::Scale, atom("P(1)"), nullptr, 2)));
  CHECK(*parse_expr("O(+1,0)*O(-1,1)") == *node(Expr::Kind::Tensor, atom("O(+1,0)"), atom("O(-1,1)")));
  // '*' binds tighter than '+', both left associative
  CHECK(*parse_expr("V(0)+V(1)*P(0)") ==
        *node(Expr::Kind::Sum, atom("V(0)"), node(Expr::Kind::Tensor, atom("V(1)"), atom("P(0)"))));
  CHECK(*parse_expr("V(0)*V(1)*P(0)") ==
        *node(Expr::Kind::Tensor, node(Expr::Kind::Tensor, atom("V(0)"), atom("V(1)")), atom("P(0)")));
  CHECK(*parse_expr(" dual( O(+2,1) ) ") == *node(Expr::Kind::Dual, atom("O(+2,1)")));
}

TEST_CASE("parser errors") {
  for (const char* bad : {"", "P(0)*", "(V(0)", "V(0))", "dual V(0)", "2*", "V(0) V(1)", "+V(0)"})
    CHECK_THROWS_AS(parse_expr(bad), SyntaxError);
  CHECK_THROWS_AS(parse_expr("P(0)*Q(1)"), InvalidLabel);
  try {
    parse_expr("V(0)+*P(1)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("print/parse round trip") {
  for (const char* s : {"V(0)", "P(0)*M(2,1,2/3)", "V(0) + 2*P(1)", "dual(O(+1,0)*O(-1,1))", "(V(0) + V(1))*P(0)",
                        "3*(M(1,0,inf) + St(1))", "V(1)*(P(0)*P(1))", "2*3*V(0)"}) {
    ExprPtr e = parse_expr(s);
    std::string p = print_expr(*e);
    CAPTURE(p);
    CHECK(*parse_expr(p) == *e);
    CHECK(print_expr(*parse_expr(p)) == p);
  }
}

TEST_CASE("module and closed-form evaluation agree") {
  auto k2 = algebra_by_name("K2");
  for (const char* s : {"dual(O(+2,0))*M(1,1,0)", "(V(1) + O(-1,0))*P(1)", "2*M(1,0,1)*M(1,0,1)"}) {
    CAPTURE(s);
    ExprPtr e = parse_expr(s);
    CHECK(GreenElement::from_labels(identify(eval_module(*e, k2))) == eval_green(*e, *k2));
  }
}

TEST_CASE("JSON round trips") {
  auto k2 = algebra_by_name("K2");
  Module m = eval_module(*parse_expr("O(+1,0) + M(2,1,-1)"), k2);
  Module back = module_from_json(json::parse(module_to_json(m).dump()));
  CHECK(back.actions == m.actions);
  GreenElement g = GreenElement(L("P(0)"), 2) - GreenElement(L("V(1)"));
  CHECK(green_from_json(to_json(g)) == g);
  IdealSpec s = IdealSpec::proper_from(Bound::of(2), {{Eta::inf(), Bound::inf()}});
  CHECK(ideal_from_json(to_json(s)) == s);
  CHECK(rat_from_json(json("-3/9")) == Rat(-1, 3));
  CHECK(rat_from_json(json(4)) == Rat(4));

  std::ifstream in(data("syz_plus_m.json"));
  Module f = module_from_json(json::parse(in));
  CHECK(identify(f) == std::vector<Label>{L("O(+1,0)"), L("M(1,1,2/3)")});

  json bad = module_to_json(realize(L("V(0)"), k2));
  bad["actions"]["K"] = json::array({json::array({"2"})});
  CHECK_THROWS_AS(module_from_json(bad), Error);
}

TEST_CASE("CLI outputs and exit codes") {
  Run f = run("fuse 'P(0)*P(1)'");
  CHECK(f.code == 0);
  CHECK(f.out == "2*P(0) + 2*P(1)\n");
  CHECK(run("qdim 'V(1)'").out == "-1\n");
  CHECK(run("green-mul 'P(0)*O(+1,0)'").out == "P(0) + 2*P(1)\n");
  CHECK(run("--algebra DK1 fuse 'St(0)*St(0)'").out == "P(1)\n");
  CHECK(run("negligible 'M(1,0,2/3)'").out == "true\n");
  CHECK(run("ideal closure 'M(2,0,2/3)'").out == "Proper(default 1, f(2/3)=3)\n");
  CHECK(run("ideal closure 'O(+1,0)'").out == "Improper\n");
  CHECK(run("identify " + data("syz_plus_m.json")).out == "O(+1,0) + M(1,1,2/3)\n");
  CHECK(run("ideal contains " + data("ideal_m2.json") + " 'M(2,1,2/3)+P(0)'").out == "true\n");
  CHECK(run("ideal contains " + data("ideal_m2.json") + " 'M(3,0,2/3)'").out == "false\n");
  CHECK(run("auslander 2").code == 0);
  CHECK(run("verify --suite auslander").code == 0);
  CHECK(run("verify --suite hopf --etas 0,inf").code == 0);

  CHECK(run("fuse 'P(0)*'").code == 2);
  CHECK(run("fuse 'Q(0)'").code == 2);
  CHECK(run("--algebra K9 fuse 'V(0)'").code == 2);
  CHECK(run("--algebra K2 fuse 'St(0)'").code == 2);
  CHECK(run("auslander 7").code == 2);
  CHECK(run("verify --suite nosuch").code == 2);
  CHECK(run("identify /nonexistent.json").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("CLI JSON envelope") {
  Run r = run("--json fuse 'M(1,0,0)*M(1,0,0)'");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == "fuse");
  CHECK(j["inputs"]["algebra"] == "K2");
  CHECK(j["agreement"] == true);
  CHECK(green_from_json(j["result"]["oracle"]) == green_from_json(j["result"]["closed_form"]));
  json a = json::parse(run("--json export algebra").out);
  CHECK(a["result"]["dim"] == 8);
  json s = json::parse(run("--json export skeleton").out);
  CHECK(s["command"] == "export");
}
