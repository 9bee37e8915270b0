#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nichols/errors.hpp"
#include "nichols/ratlin.hpp"

using namespace nichols;

namespace {

RatMatrix random_matrix(std::mt19937& rng, int r, int c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Rat(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, 6).to_string() == "-1/2");
  CHECK(Rat::from_string("10/-4") == Rat(-5, 2));
  CHECK((Rat(7, 3) / Rat(7, 3)).is_one());
  CHECK(Rat(1, 3) < Rat(1, 2));
  // promotes past 64 bits and demotes back
  Rat big(1LL << 62);
  Rat sq = big * big * Rat(4);
  CHECK(sq / big / big == Rat(4));
  CHECK(sq.to_string() == mpz_class(mpz_class(1) << 126).get_str());
}

TEST_CASE("kernel_basis small cases") {
  CHECK(kernel_basis(RatMatrix::identity(2)).empty());
  RatMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  auto k = kernel_basis(a);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RatVec{Rat(-2), Rat(1)});
}

TEST_CASE("kernel of a constructed rank-4 matrix") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix l = random_matrix(rng, 6, 4), r = random_matrix(rng, 4, 6);
    RatMatrix a = l * r;
    // rank is at most 4; compare with the kernel dimension either way
    auto k = kernel_basis(a);
    CHECK(int(k.size()) + rank(a) == 6);
    for (const auto& v : k) {
      RatVec z = a * v;
      for (const auto& x : z) CHECK(x.is_zero());
    }
    if (rank(l) == 4 && rank(r) == 4) CHECK(k.size() == 2);
  }
}

TEST_CASE("solve_linear") {
  auto s = solve_linear(RatMatrix::identity(3), {Rat(1), Rat(2), Rat(3)});
  CHECK(s.x0 == RatVec{Rat(1), Rat(2), Rat(3)});
  CHECK(s.kernel.empty());

  RatMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  auto t = solve_linear(a, {Rat(1)});
  CHECK(t.x0[0] + t.x0[1] == Rat(1));
  CHECK(t.kernel.size() == 1);

  RatMatrix c(2, 1);
  c(0, 0) = 1;
  c(1, 0) = 1;
  CHECK_THROWS_AS(solve_linear(c, {Rat(0), Rat(1)}), NoSolution);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix m = random_matrix(rng, 4, 5);
    RatVec x0(5);
    for (auto& x : x0) x = Rat(int(rng() % 7) - 3, 1 + int(rng() % 3));
    RatVec b = m * x0;
    auto sol = solve_linear(m, b);
    CHECK(m * sol.x0 == b);
  }
}

TEST_CASE("kronecker_product") {
  CHECK(kronecker_product(RatMatrix::identity(2), RatMatrix::identity(3)) == RatMatrix::identity(6));
  RatMatrix n(2, 2);
  n(0, 1) = 1;
  RatMatrix two = RatMatrix::scalar(1, Rat(2));
  RatMatrix expect(2, 2);
  expect(0, 1) = 2;
  CHECK(kronecker_product(n, two) == expect);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix a = random_matrix(rng, 3, 3, -1, 1), b = random_matrix(rng, 3, 3, -1, 1);
    CHECK(rank(kronecker_product(a, b)) == rank(a) * rank(b));
    RatMatrix c = random_matrix(rng, 2, 2);
    CHECK(kronecker_product(kronecker_product(a, b), c) == kronecker_product(a, kronecker_product(b, c)));
  }
}

TEST_CASE("inverse, column space, charpoly") {
  std::mt19937 rng(5);
  RatMatrix a = random_matrix(rng, 4, 4);
  auto inv = inverse(a);
  if (rank(a) == 4) {
    REQUIRE(inv.has_value());
    CHECK(a * *inv == RatMatrix::identity(4));
  } else {
    CHECK(!inv.has_value());
  }
  RatMatrix z(2, 2);
  CHECK(!inverse(z).has_value());

  // diag(2,3): (x-2)(x-3) = x^2 - 5x + 6
  RatMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  auto p = charpoly(d);
  REQUIRE(p.size() == 3);
  auto roots = rational_roots(p);
  CHECK(roots.size() == 2);

  RatMatrix cs = column_space(random_matrix(rng, 5, 3) * random_matrix(rng, 3, 6));
  CHECK(cs.cols() <= 3);
  CHECK(rank(cs) == cs.cols());
}
