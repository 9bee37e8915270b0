#include "nichols/projcat.hpp"

#include <functional>

#include "nichols/errors.hpp"
#include "nichols/indec.hpp"

namespace nichols {

namespace {

RatVec flatten(const RatMatrix& f) {
  RatVec v;
  v.reserve(std::size_t(f.rows()) * f.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) v.push_back(f(i, j));
  return v;
}

// Coordinates of target in the span of the given vectors (throws NoSolution).
RatVec coords_in(const std::vector<RatVec>& basis, const RatVec& target) {
  if (basis.empty()) {
    for (const auto& x : target)
      if (!x.is_zero()) throw NoSolution("vector outside an empty span");
    return {};
  }
  return solve_linear(RatMatrix::from_columns(basis, static_cast<int>(target.size())), target).x0;
}

std::string pim_name(const Pim& p) {
  return std::string(p.kind == Pim::Kind::Steinberg ? "St(" : "P(") + std::to_string(p.r) + ")";
}

}  // namespace

RatVec ProjSkeleton::coordinates(int i, int j, const RatMatrix& f) const {
  std::vector<RatVec> b;
  for (const auto& h : homs[i][j].basis) b.push_back(flatten(h));
  return coords_in(b, flatten(f));
}

RatMatrix ProjSkeleton::from_coordinates(int i, int j, const RatVec& c) const {
  RatMatrix f(objects[j].dim, objects[i].dim);
  for (std::size_t a = 0; a < c.size(); ++a)
    if (!c[a].is_zero()) f = f + homs[i][j].basis[a] * c[a];
  return f;
}

ProjSkeleton build_skeleton(AlgebraPtr alg) {
  ProjSkeleton sk;
  sk.alg = alg;
  const int np = static_cast<int>(alg->pims.size());
  for (int j = 0; j < np; ++j) {
    sk.objects.push_back(pim_module(alg, j));
    sk.names.push_back(pim_name(alg->pims[j]));
  }
  sk.homs.assign(np, std::vector<HomBasis>(np));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) sk.homs[i][j] = hom_basis(sk.objects[i], sk.objects[j]);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      for (int k = 0; k < np; ++k) {
        auto& c = sk.comp[{i, j, k}];
        for (const auto& a : sk.homs[j][k].basis) {
          std::vector<RatVec> row;
          for (const auto& b : sk.homs[i][j].basis) row.push_back(sk.coordinates(i, k, a * b));
          c.push_back(std::move(row));
        }
      }
  return sk;
}

RatMatrix right_multiplication_map(const HopfAlgebra& alg, int r, int s, const RatVec& x) {
  const auto& cache = alg.pim_cache();
  const auto& src = cache.pim_basis.at(r);
  const auto& tgt = cache.pim_basis.at(s);
  std::vector<RatVec> cols;
  for (const auto& b : src) cols.push_back(coords_in(tgt, alg.mul(b, x)));
  return RatMatrix::from_columns(cols, static_cast<int>(tgt.size()));
}

bool AuslanderReport::pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

namespace {

// A morphism between the summands P_0, P_1 of P = P_0 + P_1.
struct Arrow {
  int src = 0, tgt = 0;
  RatMatrix f;
};

// Composite a o b, or nullopt when the ends do not meet (the zero map in End(P)).
std::optional<Arrow> compose(const Arrow& a, const Arrow& b) {
  if (b.tgt != a.src) return std::nullopt;
  return Arrow{b.src, a.tgt, a.f * b.f};
}

// Arrow as a block of an endomorphism of P, flattened.
RatVec embed(const Arrow& a, const std::vector<int>& dims) {
  int off_s = a.src == 0 ? 0 : dims[0];
  int off_t = a.tgt == 0 ? 0 : dims[0];
  int D = dims[0] + dims[1];
  RatMatrix big(D, D);
  big.set_block(off_t, off_s, a.f);
  return flatten(big);
}

bool same(const std::optional<Arrow>& a, const std::optional<Arrow>& b) {
  bool za = !a || a->f.is_zero(), zb = !b || b->f.is_zero();
  if (za || zb) return za == zb;
  return a->src == b->src && a->tgt == b->tgt && a->f == b->f;
}

std::optional<Arrow> negate(std::optional<Arrow> a) {
  if (a) a->f = a->f * Rat(-1);
  return a;
}

}  // namespace

AuslanderReport verify_auslander_iso(int m) {
  if (m < 1 || m > 3) throw OutOfRange("Auslander check supports 1 <= m <= 3");
  AlgebraPtr alg = build_Km(m);
  AuslanderReport rep;
  rep.m = m;
  rep.dim_Km = alg->dim;
  auto check = [&](std::string name, bool ok) { rep.checks.emplace_back(std::move(name), ok); };

  const auto& cache = alg->pim_cache();
  RatVec e[2] = {alg->pims[0].idempotent, alg->pims[1].idempotent};
  std::vector<int> dims = {cache.pims[0].dim, cache.pims[1].dim};
  Module P[2] = {pim_module(alg, 0), pim_module(alg, 1)};

  bool homdims = true;
  long long expect = 1LL << (m - 1);
  rep.hom_dims.assign(2, std::vector<int>(2));
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      rep.hom_dims[r][s] = static_cast<int>(hom_basis(P[r], P[s]).basis.size());
      homdims = homdims && rep.hom_dims[r][s] == expect;
    }
  check("dim hom(P_r, P_s) = 2^(m-1)", homdims);

  // iota_r and phi^i_r: e_r -> xi_i e_{1+r}
  Arrow iota[2], phi[2][3];
  for (int r = 0; r < 2; ++r) {
    iota[r] = {r, r, right_multiplication_map(*alg, r, r, e[r])};
    for (int i = 1; i <= m; ++i)
      phi[r][i - 1] = {r, 1 - r, right_multiplication_map(*alg, r, 1 - r, alg->mul(alg->generator(i), e[1 - r]))};
  }
  bool inter = true;
  for (int r = 0; r < 2; ++r) {
    inter = inter && is_intertwiner(P[r], P[r], iota[r].f);
    for (int i = 0; i < m; ++i) inter = inter && is_intertwiner(P[r], P[1 - r], phi[r][i].f);
  }
  check("generators are module maps", inter);

  bool rel[8] = {true, true, true, true, true, true, true, true};
  for (int r = 0; r < 2; ++r) {
    int s = 1 - r;
    for (int i = 0; i < m; ++i) {
      rel[0] = rel[0] && same(compose(phi[r][i], phi[s][i]), std::nullopt);
      for (int j = 0; j < m; ++j) {
        rel[1] = rel[1] && same(compose(phi[r][i], phi[r][j]), std::nullopt);
        rel[2] = rel[2] && same(compose(phi[r][i], phi[s][j]), negate(compose(phi[r][j], phi[s][i])));
      }
      rel[3] = rel[3] && same(compose(phi[r][i], iota[r]), phi[r][i]);
      rel[4] = rel[4] && same(compose(iota[s], phi[r][i]), phi[r][i]);
      rel[7] = rel[7] && same(compose(iota[r], phi[r][i]), std::nullopt) &&
               same(compose(phi[r][i], iota[s]), std::nullopt);
    }
    rel[5] = rel[5] && same(compose(iota[r], iota[r]), iota[r]);
    rel[6] = rel[6] && same(compose(iota[r], iota[s]), std::nullopt);
  }
  const char* names[8] = {"phi^i_r phi^i_{1+r} = 0",       "phi^i_r phi^j_r = 0",
                          "phi^i_r phi^j_{1+r} = -phi^j_r phi^i_{1+r}", "phi^i_r iota_r = phi^i_r",
                          "iota_{1+r} phi^i_r = phi^i_r",   "iota_r^2 = iota_r",
                          "iota_r iota_{1+r} = 0",          "iota_r phi^i_r = 0 = phi^i_r iota_{1+r}"};
  for (int k = 0; k < 8; ++k) check(names[k], rel[k]);

  // Basis of A: composites of generators along increasing words, with F
  // evaluated multiplicatively on the factors.
  struct BasisMap {
    Arrow a;
    RatVec F;
  };
  std::vector<BasisMap> B;
  for (int r = 0; r < 2; ++r)
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<int> word;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) word.push_back(i);
      // phi^{w_1} o ... o phi^{w_k}, rightmost applied first from P_r
      Arrow cur = iota[r];
      RatVec F = e[r];
      for (int t = static_cast<int>(word.size()) - 1; t >= 0; --t) {
        const Arrow& g = phi[cur.tgt][word[t]];
        cur = *compose(g, cur);
        F = alg->mul(alg->mul(alg->generator(word[t] + 1), e[g.src]), F);
      }
      B.push_back({cur, F});
    }
  std::vector<RatVec> flat;
  for (const auto& b : B) flat.push_back(embed(b.a, dims));
  int D = dims[0] + dims[1];
  rep.dim_A = rank(RatMatrix::from_columns(flat, D * D));
  int dim_end = 0;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) dim_end += rep.hom_dims[r][s];
  check("composites of generators form a basis of End(P)", rep.dim_A == static_cast<int>(B.size()) && rep.dim_A == dim_end);

  auto F_of = [&](const std::optional<Arrow>& a) {
    RatVec out(alg->dim);
    if (!a || a->f.is_zero()) return out;
    RatVec c = coords_in(flat, embed(*a, dims));
    for (std::size_t t = 0; t < B.size(); ++t)
      if (!c[t].is_zero()) out = add(out, scale(c[t], B[t].F));
    return out;
  };

  bool hom = true;
  for (const auto& x : B)
    for (const auto& y : B) hom = hom && F_of(compose(x.a, y.a)) == alg->mul(x.F, y.F);
  bool unit = add(F_of(iota[0]), F_of(iota[1])) == alg->one();
  check("F is multiplicative on basis pairs", hom);
  check("F(iota_0 + iota_1) = 1", unit);

  // phi^w_r: e_r -> w e_{r+|w|}. As a composite of the phi^i it is the reversed
  // word, so F(phi^w_0 + phi^w_1) = sign(w) w and F(phi^w_0 - phi^w_1) = sign(w) w K
  // with sign(w) = (-1)^(|w|(|w|-1)/2); w K = (-1)^|w| K w.
  bool surj = true;
  std::vector<RatVec> images;
  for (int mask = 0; mask < (1 << m); ++mask) {
    RatVec w = alg->basis_vec(mask << 1);
    int len = __builtin_popcount(mask);
    int par = len & 1;
    Rat sign((len * (len - 1) / 2) % 2 ? -1 : 1);
    RatVec Fw[2];
    for (int r = 0; r < 2; ++r) {
      int s = r ^ par;
      Arrow a{r, s, right_multiplication_map(*alg, r, s, alg->mul(w, e[s]))};
      Fw[r] = F_of(a);
    }
    RatVec plus = add(Fw[0], Fw[1]);
    RatVec minus = add(Fw[0], scale(Rat(-1), Fw[1]));
    surj = surj && plus == scale(sign, w) && minus == scale(sign, alg->mul(w, alg->basis_vec(1)));
    images.push_back(plus);
    images.push_back(minus);
  }
  check("F(phi^w_0 + phi^w_1) = +-w and F(phi^w_0 - phi^w_1) = +-w K", surj);
  int img_rank = rank(RatMatrix::from_columns(images, alg->dim));
  check("F is surjective", img_rank == alg->dim);
  check("dim A = dim K_m, so F is bijective", rep.dim_A == rep.dim_Km && img_rank == alg->dim);
  return rep;
}

namespace {

void require_nonzero(const RatMatrix& phi) {
  if (phi.is_zero()) throw ZeroMap("the simple-image test needs a nonzero map");
}

// Nonzero combinations of the basis with coefficients in {-1, 0, 1}.
std::vector<RatMatrix> small_combinations(const std::vector<RatMatrix>& basis, int rows, int cols) {
  std::vector<RatMatrix> out;
  int n = static_cast<int>(basis.size());
  int total = 1;
  for (int t = 0; t < n; ++t) total *= 3;
  for (int code = 1; code < total; ++code) {
    RatMatrix f(rows, cols);
    int c = code;
    for (int t = 0; t < n; ++t, c /= 3) {
      int d = c % 3;
      if (d == 1) f = f + basis[t];
      if (d == 2) f = f - basis[t];
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

bool has_simple_image_direct(const ProjSkeleton& sk, int i, int k, const RatMatrix& phi) {
  require_nonzero(phi);
  (void)i;
  return is_simple(object_from_map(sk.objects[k], phi));
}

bool has_simple_image_lemma(const ProjSkeleton& sk, int i, int k, const RatMatrix& phi) {
  require_nonzero(phi);
  (void)i;
  const int np = sk.size();
  // Targets: each object, then the sum of all of them (maps into a sum are
  // tuples of maps into the summands).
  std::vector<std::vector<int>> targets;
  for (int t = 0; t < np; ++t) targets.push_back({t});
  std::vector<int> all;
  for (int t = 0; t < np; ++t) all.push_back(t);
  targets.push_back(all);

  for (int l = 0; l < np; ++l) {
    const auto& hb = sk.homs[l][k].basis;
    for (const auto& psi : small_combinations(hb, sk.objects[k].dim, sk.objects[l].dim)) {
      for (const auto& tgt : targets) {
        // j = (j_t) with j_t in homs[k][t]; solve j psi = 0 over all coordinates.
        std::vector<RatVec> cols;  // column per basis map of hom(P_k, P)
        std::vector<RatMatrix> jbasis;
        std::vector<int> owner;
        for (int t : tgt)
          for (const auto& j : sk.homs[k][t].basis) {
            jbasis.push_back(j);
            owner.push_back(t);
          }
        if (jbasis.empty()) continue;
        int total_rows = 0;
        std::vector<int> offset;
        for (int t : tgt) {
          offset.push_back(total_rows);
          total_rows += sk.objects[t].dim * sk.objects[l].dim;
        }
        for (std::size_t a = 0; a < jbasis.size(); ++a) {
          RatVec col(total_rows);
          RatVec part = flatten(jbasis[a] * psi);
          std::size_t pos = 0;
          while (tgt[pos] != owner[a]) ++pos;
          for (std::size_t q = 0; q < part.size(); ++q) col[offset[pos] + q] = part[q];
          cols.push_back(std::move(col));
        }
        RatMatrix sys = RatMatrix::from_columns(cols, total_rows);
        for (const auto& c : kernel_basis(sys)) {
          // j phi = 0 for this j
          for (std::size_t pos = 0; pos < tgt.size(); ++pos) {
            RatMatrix jt(sk.objects[tgt[pos]].dim, sk.objects[k].dim);
            for (std::size_t a = 0; a < jbasis.size(); ++a)
              if (owner[a] == tgt[pos] && !c[a].is_zero()) jt = jt + jbasis[a] * c[a];
            if (!(jt * phi).is_zero()) return false;
          }
        }
      }
    }
  }
  return true;
}

Module object_from_map(const Module& target, const RatMatrix& phi) {
  return submodule(target, column_space(phi));
}

ProjectiveMap presenting_map(const Module& m) {
  Cover cov = projective_cover(m);
  Hull hull = injective_hull(m);
  return {cov.projective, hull.injective, hull.map * cov.map};
}

}  // namespace nichols
