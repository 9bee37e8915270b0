#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/errors.hpp"
#include "nichols/hopf.hpp"
#include "nichols/ratlin.hpp"

using namespace nichols;

namespace {

int index_of(const HopfAlgebra& a, const std::string& word) {
  for (int i = 0; i < a.dim; ++i)
    if (a.basis_labels[i] == word) return i;
  FAIL("no basis word " << word);
  return -1;
}

RatVec word(const HopfAlgebra& a, const std::string& w) { return a.basis_vec(index_of(a, w)); }

bool axiom(const AxiomReport& r, const std::string& name) {
  for (const auto& it : r.items)
    if (it.axiom == name) return it.pass;
  FAIL("no axiom " << name);
  return false;
}

std::shared_ptr<HopfAlgebra> copy_structure(const HopfAlgebra& a) {
  auto c = std::make_shared<HopfAlgebra>();
  c->name = a.name + "-copy";
  c->dim = a.dim;
  c->basis_labels = a.basis_labels;
  c->spelling = a.spelling;
  c->gen_labels = a.gen_labels;
  c->gen_basis = a.gen_basis;
  c->mult = a.mult;
  c->comult = a.comult;
  c->counit = a.counit;
  c->antipode = a.antipode;
  c->pivot = a.pivot;
  c->pims = a.pims;
  return c;
}

}  // namespace

TEST_CASE("K_m dimensions and anticommuting generators") {
  CHECK(build_Km(1)->dim == 4);
  CHECK(build_Km(3)->dim == 16);
  auto k2 = build_Km(2);
  CHECK(k2->dim == 8);
  RatVec x1 = k2->generator(k2->gen_index("xi1")), x2 = k2->generator(k2->gen_index("xi2"));
  CHECK(k2->mul(x1, x2) == scale(Rat(-1), k2->mul(x2, x1)));
  CHECK(k2->mul(x1, x1) == RatVec(8));
  RatVec K = k2->generator(0);
  CHECK(k2->mul(K, K) == k2->one());
  CHECK(k2->mul(K, x1) == scale(Rat(-1), k2->mul(x1, K)));
  CHECK_THROWS_AS(build_Km(0), OutOfRange);
  CHECK_THROWS_AS(build_Km(7), OutOfRange);
}

TEST_CASE("K_m antipode on generators") {
  auto k2 = algebra_by_name("K2");
  RatVec x1 = word(*k2, "xi1");
  // S(xi) = -K xi
  CHECK(k2->apply_antipode(x1) == scale(Rat(-1), word(*k2, "K*xi1")));
  CHECK(k2->apply_antipode(word(*k2, "K")) == word(*k2, "K"));
  CHECK(k2->apply_counit(word(*k2, "K")) == Rat(1));
  CHECK(k2->apply_counit(x1) == Rat(0));
}

TEST_CASE("DK1 presentation") {
  auto d = algebra_by_name("DK1");
  CHECK(d->dim == 16);
  RatVec a = word(*d, "a"), b = word(*d, "b"), c = word(*d, "c"), dd = word(*d, "d");
  RatVec lhs = add(d->mul(a, dd), d->mul(dd, a));
  RatVec rhs = add(d->one(), scale(Rat(-1), d->mul(b, c)));
  CHECK(lhs == rhs);
  CHECK(d->mul(a, a) == RatVec(16));
  CHECK(d->mul(dd, dd) == RatVec(16));
  CHECK(d->mul(b, b) == d->one());
  CHECK(d->mul(c, c) == d->one());
  CHECK(d->apply_antipode(a) == scale(Rat(-1), d->mul(a, b)));
  CHECK(d->apply_antipode(dd) == scale(Rat(-1), d->mul(dd, c)));
}

TEST_CASE("Hopf axioms hold") {
  for (const char* name : {"K1", "K2", "K3", "DK1"}) {
    CAPTURE(name);
    auto rep = check_hopf_axioms(*algebra_by_name(name));
    CHECK(rep.pass());
    CHECK(rep.items.size() >= 6);
  }
}

TEST_CASE("corrupted DK1 relation is caught") {
  auto d = algebra_by_name("DK1");
  auto bad = copy_structure(*d);
  // d*a = 1 - bc - ad becomes 1 - ad, i.e. ad + da = 1
  int ia = index_of(*d, "a"), id = index_of(*d, "d"), iad = index_of(*d, "a*d");
  bad->mult[id * d->dim + ia] = SparseRow{{0, Rat(1)}, {iad, Rat(-1)}};
  auto rep = check_hopf_axioms(*bad);
  CHECK(!rep.pass());
  CHECK(!axiom(rep, "bialgebra compatibility"));
}

TEST_CASE("Jacobson radical dimensions") {
  auto k2 = algebra_by_name("K2");
  auto j = jacobson_radical(*k2);
  CHECK(j.size() == 6);
  // independent oracle: the words containing some xi span the radical
  RowReducer span(8);
  for (int w = 0; w < 8; ++w)
    if (k2->basis_labels[w].find("xi") != std::string::npos) span.add_dense(k2->basis_vec(w));
  for (const auto& v : j) CHECK(span.in_span(to_sparse(v)));

  auto d = algebra_by_name("DK1");
  CHECK(jacobson_radical(*d).size() == 16 - (1 + 1 + 4 + 4));
  CHECK(jacobson_radical(*algebra_by_name("K1")).size() == 2);
}

TEST_CASE("pivotal element implements S^2") {
  for (const char* name : {"K2", "DK1"}) {
    auto a = algebra_by_name(name);
    RatVec g = a->pivot;
    RatVec ginv = a->apply_antipode(g);
    CHECK(a->mul(g, ginv) == a->one());
    for (int w = 0; w < a->dim; ++w) {
      RatVec x = a->basis_vec(w);
      CHECK(a->apply_antipode(a->apply_antipode(x)) == a->mul(a->mul(g, x), ginv));
    }
  }
}

TEST_CASE("unknown algebra name") { CHECK_THROWS_AS(algebra_by_name("Q8"), Error); }
