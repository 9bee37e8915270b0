#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/errors.hpp"
#include "nichols/green.hpp"

using namespace nichols;

namespace {

AlgebraPtr K2() { return algebra_by_name("K2"); }
Label L(const char* s) { return Label::parse(s); }
std::vector<Label> Ls(std::initializer_list<const char*> xs) {
  std::vector<Label> out;
  for (auto x : xs) out.push_back(L(x));
  return out;
}

}  // namespace

TEST_CASE("label text round-trips") {
  for (const char* s : {"V(0)", "V(1)", "P(1)", "O(+3,0)", "O(-2,1)", "M(2,1,inf)", "M(1,0,-5/7)", "St(1)"})
    CHECK(L(s).to_string() == s);
  CHECK(L("V(2,0)") == Label::St(0));
  CHECK(Label::Omega(0, 1) == Label::V(1));
  CHECK(Label::Omega(-2, 0) == L("O(-2,0)"));
  for (const char* bad : {"", "V(2)", "Q(0)", "M(0,0,1)", "O(0,0)", "M(1,0,1/0)", "P(0"})
    CHECK_THROWS_AS(L(bad), InvalidLabel);
}

TEST_CASE("dimension function") {
  CHECK(L("V(1)").dim() == 1);
  CHECK(L("P(0)").dim() == 4);
  CHECK(L("O(+3,1)").dim() == 7);
  CHECK(L("O(-2,0)").dim() == 5);
  CHECK(L("M(3,0,2)").dim() == 6);
  CHECK(L("St(0)").dim() == 2);
}

TEST_CASE("realize is canonical and indecomposable") {
  for (const auto& l : label_sweep(*K2(), 3, 3, {Eta::finite(0), Eta::inf(), Eta::finite(Rat(2, 3))})) {
    CAPTURE(l.to_string());
    Module a = realize(l, K2()), b = realize(l, K2());
    CHECK(a.actions == b.actions);
    CHECK(a.dim == l.dim());
    CHECK(check_module(a).pass);
    CHECK(is_indecomposable(a));
    CHECK(identify(a) == std::vector<Label>{l});
  }
  CHECK_THROWS_AS(realize(Label::St(0), K2()), InvalidLabel);
  CHECK_THROWS_AS(realize(L("M(1,0,0)"), algebra_by_name("K3")), InvalidLabel);
}

TEST_CASE("syzygies and resolutions") {
  Module s = realize(L("O(+2,0)"), K2());
  CHECK(s.dim == 5);
  std::vector<int> cover = projective_multiplicities(projective_cover(s).projective);
  CHECK(cover == std::vector<int>{3, 0});
  CHECK(identify(syzygy(1, 0)) == Ls({"O(+1,0)"}));
  CHECK(syzygy(-1, 0).dim == 3);
  CHECK(identify(syzygy(-1, 0)) == Ls({"O(-1,0)"}));
  for (int r : {0, 1}) {
    auto res = resolution(4, r);
    CHECK(res.syzygy.dim == 9);
    // stage j: (j+1) copies, parity r + j
    for (int j = 0; j < 4; ++j) {
      CHECK(res.stage_multiplicities[j][(r + j) % 2] == j + 1);
      CHECK(res.stage_multiplicities[j][(r + j + 1) % 2] == 0);
    }
    CHECK(projective_multiplicities(projective_cover(syzygy(3, r)).projective)[(r + 1) % 2] == 4);
    auto inj = resolution(-3, r);
    CHECK(identify(inj.syzygy) == std::vector<Label>{Label::Omega(-3, r)});
  }
  CHECK_THROWS_AS(resolution(9, 0), OutOfRange);
  CHECK_THROWS_AS(resolution(0, 0), OutOfRange);
}

TEST_CASE("identify") {
  Module p = realize(Label::P(0), K2());
  CHECK(identify(submodule(p, radical(p))) == Ls({"O(+1,0)"}));
  CHECK(identify(tensor(realize(Label::V(1), K2()), realize(L("M(2,1,3)"), K2()))) == Ls({"M(2,0,3)"}));
  CHECK(identify(zero_module(K2())).empty());
  Module mix = direct_sum(K2(), {realize(L("O(-1,1)"), K2()), realize(L("V(0)"), K2()), realize(L("P(1)"), K2())});
  CHECK(identify(mix) == Ls({"V(0)", "P(1)", "O(-1,1)"}));
}

TEST_CASE("eta calibration") {
  std::vector<Eta> etas = {Eta::finite(0), Eta::finite(1), Eta::finite(-1), Eta::finite(Rat(2, 3)), Eta::inf()};
  for (const auto& e : etas)
    for (const auto& f : etas) {
      auto out = identify(tensor(realize(Label::M(1, 0, e), K2()), realize(Label::M(1, 0, f), K2())));
      bool nonproj = false;
      for (const auto& l : out) nonproj = nonproj || !l.is_projective();
      CHECK(nonproj == (e == f));
    }
  auto distinct = identify(tensor(realize(L("M(1,0,0)"), K2()), realize(L("M(1,0,1)"), K2())));
  CHECK(distinct == Ls({"P(0)"}));
}

TEST_CASE("dual_label agrees with module duality") {
  auto d = algebra_by_name("DK1");
  for (const auto& l : label_sweep(*d, 2, 2, {Eta::finite(1), Eta::inf()})) {
    CAPTURE(l.to_string());
    CHECK(identify(dual(realize(l, d))) == std::vector<Label>{dual_label(l)});
  }
}

TEST_CASE("DK1 and the pi projection") {
  auto d = algebra_by_name("DK1");
  CHECK(!in_r0(realize(Label::St(0), d)));
  CHECK(in_r0(realize(Label::P(0), d)));
  CHECK(in_r0(realize(Label::P(1), d)));
  CHECK(in_r0(trivial_module(d)));
  CHECK_THROWS_AS(restrict_pi(realize(Label::St(0), d)), NotInR0);
  for (const char* s : {"V(1)", "P(0)", "O(+2,1)", "M(2,0,1/2)"}) {
    Module m = realize(L(s), K2());
    Module up = inflate_pi(m);
    CHECK(in_r0(up));
    CHECK(identify(up) == Ls({s}));
    CHECK(identify(restrict_pi(up)) == Ls({s}));
  }
}

TEST_CASE("eta parsing") {
  CHECK(Eta::parse("inf") == Eta::inf());
  CHECK(Eta::parse("4/6") == Eta::finite(Rat(2, 3)));
  CHECK(Eta::parse("-3").to_string() == "-3");
  CHECK(Eta::finite(1) < Eta::inf());
}
