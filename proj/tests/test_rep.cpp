#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/errors.hpp"
#include "nichols/indec.hpp"

using namespace nichols;

namespace {

AlgebraPtr K2() { return algebra_by_name("K2"); }

Module one_dim(AlgebraPtr alg, std::vector<Rat> values) {
  Module m{alg, 1, {}};
  for (const auto& v : values) m.actions.push_back(RatMatrix::scalar(1, v));
  return m;
}

std::vector<int> pim_types(const Cover& c) {
  std::vector<int> n(2, 0);
  for (int p : c.pims) ++n[p];
  return n;
}

}  // namespace

TEST_CASE("check_module") {
  CHECK(check_module(trivial_module(K2())).pass);
  CHECK(check_module(one_dim(K2(), {Rat(-1), Rat(0), Rat(0)})).pass);
  CHECK(!check_module(one_dim(K2(), {Rat(2), Rat(0), Rat(0)})).pass);
  CHECK(!check_module(one_dim(K2(), {Rat(1), Rat(1), Rat(0)})).pass);
  for (const char* l : {"P(0)", "O(+2,1)", "O(-3,0)", "M(2,1,inf)", "M(3,0,-1/2)"})
    CHECK(check_module(realize(Label::parse(l), K2())).pass);
}

TEST_CASE("tensor unit and simple fusion") {
  Module v0 = realize(Label::V(0), K2()), v1 = realize(Label::V(1), K2());
  Module m = realize(Label::parse("O(+2,0)"), K2());
  CHECK(is_isomorphic(tensor(v0, m), m));
  CHECK(is_isomorphic(tensor(m, v0), m));
  CHECK(identify(tensor(v1, v1)) == std::vector<Label>{Label::V(0)});
  Module pp = tensor(realize(Label::P(0), K2()), realize(Label::P(0), K2()));
  CHECK(pp.dim == 16);
  CHECK(check_module(pp).pass);
  CHECK(identify(pp) == std::vector<Label>{Label::P(0), Label::P(0), Label::P(1), Label::P(1)});
  CHECK_THROWS_AS(tensor(v0, realize(Label::V(0), algebra_by_name("K1"))), AlgebraMismatch);
}

TEST_CASE("dual") {
  for (const char* l : {"V(0)", "V(1)", "P(0)", "P(1)"}) {
    Module m = realize(Label::parse(l), K2());
    CHECK(is_isomorphic(dual(m), m));
  }
  CHECK(is_isomorphic(dual(realize(Label::parse("O(+2,1)"), K2())), realize(Label::parse("O(-2,1)"), K2())));
  CHECK(is_isomorphic(dual(realize(Label::parse("M(2,0,1/3)"), K2())), realize(Label::parse("M(2,1,1/3)"), K2())));
  Module m = realize(Label::parse("M(1,0,inf)"), K2());
  CHECK(dual(dual(m)).dim == m.dim);
  CHECK(is_isomorphic(dual(dual(m)), m));
}

TEST_CASE("direct_sum") {
  Module z = direct_sum(K2(), {});
  CHECK(z.dim == 0);
  Module s = direct_sum(K2(), {realize(Label::V(0), K2()), realize(Label::V(1), K2())});
  RatMatrix k(2, 2);
  k(0, 0) = 1;
  k(1, 1) = -1;
  CHECK(s.action("K") == k);
  Module big = direct_sum(K2(), {realize(Label::P(1), K2()), realize(Label::parse("O(-1,0)"), K2()),
                                 realize(Label::parse("M(2,1,0)"), K2())});
  CHECK(big.dim == 4 + 3 + 4);
  CHECK(check_module(big).pass);
}

TEST_CASE("hom_basis") {
  CHECK(hom_basis(realize(Label::P(0), K2()), realize(Label::P(1), K2())).basis.size() == 2);
  CHECK(hom_basis(realize(Label::V(0), K2()), realize(Label::V(1), K2())).basis.empty());
  CHECK(hom_basis(realize(Label::P(0), K2()), realize(Label::V(0), K2())).basis.size() == 1);
  // over K_m, dim hom(P0, P1) = 2^(m-1)
  auto k3 = algebra_by_name("K3");
  CHECK(hom_basis(pim_module(k3, 0), pim_module(k3, 1)).basis.size() == 4);
  CHECK(hom_basis(pim_module(k3, 0), pim_module(k3, 0)).basis.size() == 4);
  for (const auto& t : hom_basis(realize(Label::P(0), K2()), realize(Label::parse("O(+1,0)"), K2())).basis)
    CHECK(is_intertwiner(realize(Label::P(0), K2()), realize(Label::parse("O(+1,0)"), K2()), t));
}

TEST_CASE("radical and socle") {
  Module v = realize(Label::V(1), K2());
  CHECK(radical(v).cols() == 0);
  CHECK(socle(v).cols() == 1);
  Module p = realize(Label::P(0), K2());
  CHECK(radical(p).cols() == 3);
  CHECK(socle(p).cols() == 1);
  CHECK(identify(submodule(p, radical(p))) == std::vector<Label>{Label::parse("O(+1,0)")});
  CHECK(identify(quotient(p, socle(p)).module) == std::vector<Label>{Label::parse("O(-1,0)")});
}

TEST_CASE("projective_cover") {
  Cover cv = projective_cover(realize(Label::V(0), K2()));
  CHECK(cv.pims == std::vector<int>{0});
  CHECK(rank(cv.map) == 1);
  Cover cp = projective_cover(realize(Label::P(1), K2()));
  CHECK(cp.pims == std::vector<int>{1});
  CHECK(rank(cp.map) == 4);
  Cover c1 = projective_cover(realize(Label::parse("O(+1,0)"), K2()));
  CHECK(pim_types(c1) == std::vector<int>{0, 2});
  Cover c2 = projective_cover(realize(Label::parse("O(+2,0)"), K2()));
  CHECK(pim_types(c2) == std::vector<int>{3, 0});
  CHECK(is_intertwiner(c2.projective, realize(Label::parse("O(+2,0)"), K2()), c2.map));
}

TEST_CASE("decompose") {
  auto d0 = decompose(realize(Label::V(0), K2()));
  CHECK(d0.summands.size() == 1);
  Module pp = tensor(realize(Label::P(0), K2()), realize(Label::P(1), K2()));
  auto d = decompose(pp);
  int dims = 0;
  for (const auto& s : d.summands) {
    dims += s.module.dim;
    CHECK(is_indecomposable(s.module));
  }
  CHECK(dims == 16);
  CHECK(d.summands.size() == 4);
  CHECK(rank(d.change_of_basis) == 16);
  Module mm = tensor(realize(Label::parse("M(1,0,2/3)"), K2()), realize(Label::parse("M(1,0,2/3)"), K2()));
  CHECK(identify(mm) == std::vector<Label>{Label::parse("M(1,0,2/3)"), Label::parse("M(1,1,2/3)")});
}

TEST_CASE("isomorphism") {
  Module m = realize(Label::parse("M(2,0,5/7)"), K2());
  CHECK(is_isomorphic(m, m));
  CHECK(!is_isomorphic(realize(Label::V(0), K2()), realize(Label::V(1), K2())));
  CHECK(!is_isomorphic(realize(Label::P(0), K2()), realize(Label::parse("M(2,0,0)"), K2())));
  CHECK(!is_isomorphic(realize(Label::parse("M(2,0,0)"), K2()), realize(Label::parse("M(2,0,1)"), K2())));
  // witness after a random change of basis
  RatMatrix g = RatMatrix::identity(4);
  g(0, 1) = 2;
  g(2, 3) = Rat(-1, 3);
  g(3, 0) = 1;
  auto gi = inverse(g);
  REQUIRE(gi.has_value());
  Module twisted = m;
  for (auto& a : twisted.actions) a = g * a * *gi;
  auto w = find_isomorphism(m, twisted);
  REQUIRE(w.has_value());
  CHECK(is_intertwiner(m, twisted, *w));
  CHECK(rank(*w) == 4);
}

TEST_CASE("DK1 basics") {
  auto d = algebra_by_name("DK1");
  CHECK(check_module(realize(Label::St(0), d)).pass);
  CHECK(is_simple(realize(Label::St(0), d)));
  CHECK(projective_multiplicities(realize(Label::St(1), d)) == std::vector<int>{0, 0, 0, 1});
  CHECK(projective_multiplicities(realize(Label::P(0), d))[0] == 1);
}
