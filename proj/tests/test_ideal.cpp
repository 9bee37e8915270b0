#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/errors.hpp"
#include "nichols/ideal.hpp"

using namespace nichols;

namespace {

AlgebraPtr K2() { return algebra_by_name("K2"); }
Label L(const char* s) { return Label::parse(s); }
GreenElement G(const char* s, long long c = 1) { return GreenElement(L(s), c); }
const Eta kEta0 = Eta::finite(Rat(2, 3));

}  // namespace

TEST_CASE("Bound") {
  CHECK(Bound::parse("inf") == Bound::inf());
  CHECK(Bound::parse("3") == Bound::of(3));
  CHECK_THROWS_AS(Bound::of(0), OutOfRange);
  CHECK(Bound::of(3).exceeds(2));
  CHECK(!Bound::of(3).exceeds(3));
  CHECK(Bound::inf().exceeds(1000));
  CHECK(Bound::of(2) < Bound::inf());
}

TEST_CASE("closure examples") {
  CHECK(ideal_closure({}) == IdealSpec::projective());
  IdealSpec s = ideal_closure({Label::M(2, 0, kEta0)});
  CHECK(s.proper);
  CHECK(s.f(kEta0) == Bound::of(3));
  CHECK(s.f(Eta::finite(0)) == Bound::of(1));
  CHECK(s.to_string() == "Proper(default 1, f(2/3)=3)");
  for (auto l : {Label::M(1, 0, kEta0), Label::M(1, 1, kEta0), Label::M(2, 1, kEta0), Label::P(0), Label::P(1)})
    CHECK(s.contains(l));
  CHECK(!s.contains(Label::M(3, 0, kEta0)));
  CHECK(!s.contains(Label::M(1, 0, Eta::finite(0))));
  CHECK(!ideal_closure({L("O(+1,0)")}).proper);
  CHECK(!ideal_closure({L("V(1)")}).proper);
  CHECK(ideal_closure({L("P(1)")}) == IdealSpec::projective());
}

TEST_CASE("membership") {
  IdealSpec s = ideal_closure({Label::M(2, 0, kEta0)});
  CHECK(ideal_contains(s, GreenElement(Label::M(2, 1, kEta0)) + G("P(0)")));
  CHECK(!ideal_contains(s, GreenElement(Label::M(3, 0, kEta0))));
  CHECK(ideal_contains(s, GreenElement()));
  CHECK(ideal_contains(IdealSpec::improper(), G("V(0)", 5)));
  CHECK_THROWS_AS(ideal_contains(s, G("P(0)") - G("P(1)")), NegativeCoefficient);
}

TEST_CASE("closure is idempotent and monotone") {
  std::vector<Label> a = {Label::M(1, 0, Eta::finite(0)), Label::M(3, 1, Eta::inf())};
  std::vector<Label> b = a;
  b.push_back(Label::M(2, 0, Eta::finite(0)));
  IdealSpec ca = ideal_closure(a), cb = ideal_closure(b);
  CHECK(ideal_subset(ca, cb));
  CHECK(!ideal_subset(cb, ca));
  CHECK(ideal_subset(cb, IdealSpec::improper()));
  CHECK(ideal_subset(IdealSpec::projective(), ca));
  std::vector<Label> members;
  for (const auto& [e, f] : ca.support) members.push_back(Label::M(f.value - 1, 0, e));
  CHECK(ideal_closure(members) == ca);
}

TEST_CASE("proper specs are tensor ideals") {
  IdealSpec s = IdealSpec::proper_from(Bound::of(1), {{Eta::finite(0), Bound::of(3)}, {Eta::inf(), Bound::of(2)}});
  std::vector<Eta> etas = {Eta::finite(0), Eta::finite(1), Eta::inf()};
  auto labels = label_sweep(*K2(), 2, 2, etas);
  for (const auto& m : labels) {
    if (!s.contains(m)) continue;
    for (const auto& a : labels) {
      CAPTURE(m.to_string());
      CAPTURE(a.to_string());
      CHECK(ideal_contains(s, green_mul_oracle(a, m, K2())));
    }
  }
}

TEST_CASE("distinct functions give distinct ideals") {
  IdealSpec f = IdealSpec::proper_from(Bound::of(1), {{Eta::finite(1), Bound::of(3)}});
  IdealSpec g = IdealSpec::proper_from(Bound::of(1), {{Eta::finite(1), Bound::of(2)}});
  auto w = distinguishing_label(f, g);
  REQUIRE(w.has_value());
  CHECK(f.contains(*w) != g.contains(*w));
  CHECK(*w == Label::M(2, 0, Eta::finite(1)));
  CHECK(!distinguishing_label(f, f).has_value());
  IdealSpec h = IdealSpec::proper_from(Bound::inf(), {});
  auto wh = distinguishing_label(IdealSpec::projective(), h);
  REQUIRE(wh.has_value());
  CHECK(h.contains(*wh));
  CHECK(!IdealSpec::projective().contains(*wh));
}

TEST_CASE("unit witnesses make non-M generators improper") {
  for (const char* s : {"V(0)", "V(1)", "O(+1,0)", "O(-2,1)", "O(+3,1)"}) {
    auto w = unit_witness(L(s));
    REQUIRE(w.has_value());
    GreenElement prod = green_mul_oracle(L(s), *w, K2());
    CHECK(prod.coeff(Label::V(0)) >= 1);
  }
  CHECK(!unit_witness(L("M(1,0,0)")).has_value());
}

TEST_CASE("quantum dimension") {
  CHECK(qdim(realize(Label::V(0), K2())) == Rat(1));
  CHECK(qdim(realize(Label::V(1), K2())) == Rat(-1));
  CHECK(qdim(realize(Label::P(0), K2())) == Rat(0));
  auto labels = label_sweep(*K2(), 2, 2, {Eta::finite(0), Eta::inf()});
  for (std::size_t i = 0; i < labels.size(); i += 3)
    for (std::size_t j = 0; j < labels.size(); j += 4) {
      Module a = realize(labels[i], K2()), b = realize(labels[j], K2());
      CHECK(qdim(tensor(a, b)) == qdim(a) * qdim(b));
    }
  Module p = realize(Label::P(0), K2());
  RatMatrix t(4, 4);
  t(0, 1) = 1;
  CHECK_THROWS_AS(quantum_trace(p, t), NotEndomorphism);
  CHECK_THROWS_AS(quantum_trace(p, RatMatrix::identity(3)), NotEndomorphism);
}

TEST_CASE("negligible classification") {
  CHECK(is_negligible(realize(Label::P(0), K2())));
  CHECK(!is_negligible(realize(Label::V(0), K2())));
  CHECK(is_negligible(realize(Label::M(1, 0, kEta0), K2())));
  for (const auto& l : label_sweep(*K2(), 3, 3, {Eta::finite(0), Eta::inf(), kEta0})) {
    CAPTURE(l.to_string());
    bool expect = l.kind == Label::Kind::Proj || l.kind == Label::Kind::MType;
    CHECK(is_negligible(realize(l, K2())) == expect);
  }
  auto d = algebra_by_name("DK1");
  CHECK(is_negligible(realize(Label::St(0), d)));
  CHECK(is_negligible(realize(Label::St(1), d)));
  CHECK(!is_negligible(realize(L("O(+1,1)"), d)));
}

TEST_CASE("quasi-dominated") {
  CHECK(is_quasi_dominated(direct_sum(K2(), {realize(Label::V(0), K2()), realize(Label::M(1, 0, kEta0), K2())})));
  CHECK(!is_quasi_dominated(realize(L("O(+1,0)"), K2())));
  CHECK(is_quasi_dominated(realize(Label::P(0), K2())));
  CHECK(!is_quasi_dominated(direct_sum(K2(), {realize(Label::V(0), K2()), realize(L("O(-1,0)"), K2())})));
}
