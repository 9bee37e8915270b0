#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/errors.hpp"
#include "nichols/green.hpp"
#include "nichols/projcat.hpp"

using namespace nichols;

namespace {

AlgebraPtr K2() { return algebra_by_name("K2"); }

RatMatrix combo(const HomBasis& h, const std::vector<int>& c) {
  RatMatrix out(h.target_dim, h.source_dim);
  for (std::size_t a = 0; a < c.size(); ++a) {
    RatMatrix t = h.basis[a];
    t *= Rat(c[a]);
    out += t;
  }
  return out;
}

}  // namespace

TEST_CASE("skeleton hom dimensions") {
  ProjSkeleton sk = build_skeleton(K2());
  REQUIRE(sk.size() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(sk.homs[i][j].basis.size() == 2);
  ProjSkeleton s1 = build_skeleton(algebra_by_name("K1"));
  int total = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) total += int(s1.homs[i][j].basis.size());
  CHECK(total == 4);
  ProjSkeleton d = build_skeleton(algebra_by_name("DK1"));
  CHECK(d.size() == 4);
  CHECK(d.names[2] == "St(0)");
  // Steinberg projectives are simple: End = Q, no maps to other blocks
  CHECK(d.homs[2][2].basis.size() == 1);
  CHECK(d.homs[2][3].basis.empty());
  CHECK(d.homs[0][2].basis.empty());
}

TEST_CASE("composition constants match matrix products") {
  ProjSkeleton sk = build_skeleton(K2());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const auto& c = sk.comp.at({i, j, k});
        for (std::size_t a = 0; a < sk.homs[j][k].basis.size(); ++a)
          for (std::size_t b = 0; b < sk.homs[i][j].basis.size(); ++b) {
            RatMatrix direct = sk.homs[j][k].basis[a] * sk.homs[i][j].basis[b];
            CHECK(sk.from_coordinates(i, k, c[a][b]) == direct);
            CHECK(sk.coordinates(i, k, direct) == c[a][b]);
          }
      }
  // the identity is in End(P_i)
  for (int i = 0; i < 2; ++i) {
    RatMatrix id = RatMatrix::identity(sk.objects[i].dim);
    RatVec c = sk.coordinates(i, i, id);
    CHECK(sk.from_coordinates(i, i, c) == id);
    for (const auto& phi : sk.homs[i][1 - i].basis) CHECK(phi * id == phi);
  }
}

TEST_CASE("Auslander algebra is K_m") {
  for (int m = 1; m <= 3; ++m) {
    CAPTURE(m);
    AuslanderReport r = verify_auslander_iso(m);
    CHECK(r.pass());
    CHECK(r.dim_A == (1 << (m + 1)));
    CHECK(r.dim_Km == (1 << (m + 1)));
    for (const auto& [name, ok] : r.checks) {
      CAPTURE(name);
      CHECK(ok);
    }
    CHECK(r.checks.size() >= 10);
  }
  CHECK_THROWS_AS(verify_auslander_iso(0), OutOfRange);
  CHECK_THROWS_AS(verify_auslander_iso(4), OutOfRange);
}

TEST_CASE("right multiplication maps are intertwiners") {
  auto a = K2();
  ProjSkeleton sk = build_skeleton(a);
  RatVec xi12 = a->basis_vec(6);  // xi1*xi2
  for (int r = 0; r < 2; ++r) {
    RatMatrix f = right_multiplication_map(*a, r, r, a->mul(a->mul(a->pims[r].idempotent, xi12), a->pims[r].idempotent));
    CHECK(is_intertwiner(sk.objects[r], sk.objects[r], f));
    CHECK(rank(f) == 1);
  }
}

TEST_CASE("simple image: socle map and identity") {
  ProjSkeleton sk = build_skeleton(K2());
  RatMatrix socle_map;
  for (const auto& phi : sk.homs[0][0].basis)
    if (rank(phi) == 1) socle_map = phi;
  REQUIRE(socle_map.rows() == 4);
  CHECK(has_simple_image_direct(sk, 0, 0, socle_map));
  CHECK(has_simple_image_lemma(sk, 0, 0, socle_map));
  RatMatrix id = RatMatrix::identity(4);
  CHECK(!has_simple_image_direct(sk, 0, 0, id));
  CHECK(!has_simple_image_lemma(sk, 0, 0, id));
  CHECK_THROWS_AS(has_simple_image_direct(sk, 0, 0, RatMatrix(4, 4)), ZeroMap);
  CHECK_THROWS_AS(has_simple_image_lemma(sk, 0, 0, RatMatrix(4, 4)), ZeroMap);
}

TEST_CASE("Lemma criterion agrees with the direct test") {
  ProjSkeleton sk = build_skeleton(K2());
  int maps = 0, simple = 0;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int c0 = -2; c0 <= 2; ++c0)
        for (int c1 = -2; c1 <= 2; ++c1) {
          if (c0 == 0 && c1 == 0) continue;
          RatMatrix phi = combo(sk.homs[i][k], {c0, c1});
          bool d = has_simple_image_direct(sk, i, k, phi);
          CAPTURE(i);
          CAPTURE(k);
          CAPTURE(c0);
          CAPTURE(c1);
          CHECK(d == has_simple_image_lemma(sk, i, k, phi));
          ++maps;
          simple += d;
        }
  CHECK(maps == 96);
  CHECK(simple > 0);
  CHECK(simple < maps);
}

TEST_CASE("objects recovered from maps between projectives") {
  Module p = realize(Label::P(0), K2());
  CHECK(identify(object_from_map(p, RatMatrix::identity(4))) == std::vector<Label>{Label::P(0)});
  for (const auto& l : label_sweep(*K2(), 3, 3, {Eta::finite(0), Eta::inf(), Eta::finite(Rat(5, 7))})) {
    CAPTURE(l.to_string());
    Module m = realize(l, K2());
    ProjectiveMap pm = presenting_map(m);
    CHECK(is_intertwiner(pm.source, pm.target, pm.map));
    for (int x : projective_multiplicities(pm.source)) CHECK(x >= 0);
    int proj_dim = 0;
    for (int x : projective_multiplicities(pm.source)) proj_dim += 4 * x;
    CHECK(proj_dim == pm.source.dim);
    CHECK(identify(object_from_map(pm.target, pm.map)) == std::vector<Label>{l});
  }
}
