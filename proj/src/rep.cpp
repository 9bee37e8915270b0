#include "nichols/rep.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nichols/errors.hpp"

namespace nichols {

const RatMatrix& Module::action(const std::string& gen) const {
  int g = alg->gen_index(gen);
  if (g < 0) throw InvalidLabel("algebra " + alg->name + " has no generator '" + gen + "'");
  return actions[g];
}

Module zero_module(AlgebraPtr alg) {
  Module m{alg, 0, {}};
  m.actions.assign(alg->ngens(), RatMatrix(0, 0));
  return m;
}

Module trivial_module(AlgebraPtr alg) {
  Module m{alg, 1, {}};
  for (int g = 0; g < alg->ngens(); ++g)
    m.actions.push_back(RatMatrix::scalar(1, alg->counit[alg->gen_basis[g]]));
  return m;
}

std::vector<RatMatrix> word_actions(const Module& m) {
  const HopfAlgebra& a = *m.alg;
  std::vector<RatMatrix> out(a.dim);
  for (int w = 0; w < a.dim; ++w) {
    RatMatrix acc = RatMatrix::identity(m.dim);
    for (int g : a.spelling[w]) acc = acc * m.actions[g];
    out[w] = std::move(acc);
  }
  return out;
}

RatMatrix element_action(const std::vector<RatMatrix>& words, const RatVec& x) {
  int n = words.empty() ? 0 : words[0].rows();
  RatMatrix acc(n, n);
  for (std::size_t w = 0; w < x.size(); ++w)
    if (!x[w].is_zero()) acc += words[w] * x[w];
  return acc;
}

RatMatrix element_action(const Module& m, const RatVec& x) {
  return element_action(word_actions(m), x);
}

ModuleCheck check_module(const Module& m) {
  const HopfAlgebra& a = *m.alg;
  ModuleCheck rep;
  if (static_cast<int>(m.actions.size()) != a.ngens()) {
    rep.pass = false;
    rep.detail = "wrong number of generator actions";
    return rep;
  }
  for (int g = 0; g < a.ngens(); ++g)
    if (m.actions[g].rows() != m.dim || m.actions[g].cols() != m.dim) {
      rep.pass = false;
      rep.detail = "action of " + a.gen_labels[g] + " has wrong shape";
      return rep;
    }
  auto words = word_actions(m);
  for (int g = 0; g < a.ngens(); ++g)
    for (int w = 0; w < a.dim; ++w) {
      RatMatrix lhs = m.actions[g] * words[w];
      RatMatrix rhs(m.dim, m.dim);
      for (auto& [k, c] : a.mult[std::size_t(a.gen_basis[g]) * a.dim + w]) rhs += words[k] * c;
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.detail = "relation fails for " + a.gen_labels[g] + " * " + a.basis_labels[w];
        return rep;
      }
    }
  return rep;
}

Module tensor(const Module& m, const Module& n) {
  if (m.alg != n.alg && m.alg->name != n.alg->name)
    throw AlgebraMismatch("tensor: modules over different algebras");
  const HopfAlgebra& a = *m.alg;
  auto wm = word_actions(m), wn = word_actions(n);
  Module out{m.alg, m.dim * n.dim, {}};
  for (int g = 0; g < a.ngens(); ++g) {
    RatMatrix acc(out.dim, out.dim);
    for (auto& [k, c] : a.comult[a.gen_basis[g]]) acc += kronecker_product(wm[k / a.dim], wn[k % a.dim]) * c;
    out.actions.push_back(std::move(acc));
  }
  return out;
}

Module dual(const Module& m) {
  const HopfAlgebra& a = *m.alg;
  auto wm = word_actions(m);
  Module out{m.alg, m.dim, {}};
  for (int g = 0; g < a.ngens(); ++g)
    out.actions.push_back(element_action(wm, a.antipode.column(a.gen_basis[g])).transpose());
  return out;
}

Module direct_sum(AlgebraPtr alg, const std::vector<Module>& ms) {
  Module out{alg, 0, {}};
  for (auto& m : ms) {
    if (m.alg != alg && m.alg->name != alg->name)
      throw AlgebraMismatch("direct_sum: modules over different algebras");
    out.dim += m.dim;
  }
  for (int g = 0; g < alg->ngens(); ++g) {
    std::vector<RatMatrix> blocks;
    for (auto& m : ms) blocks.push_back(m.actions[g]);
    out.actions.push_back(block_diagonal(blocks));
  }
  if (ms.empty()) out.actions.assign(alg->ngens(), RatMatrix(0, 0));
  return out;
}

namespace {

// Generators ordered so that group-likes (diagonal-ish, cheap constraints) come
// first.
std::vector<int> generator_order(const HopfAlgebra& a) {
  std::vector<int> order(a.ngens());
  for (int g = 0; g < a.ngens(); ++g) order[g] = g;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a.comult[a.gen_basis[x]].size() < a.comult[a.gen_basis[y]].size();
  });
  return order;
}

struct SparseMat {
  std::vector<std::vector<std::pair<int, Rat>>> rows, cols;
};

SparseMat sparse_of(const RatMatrix& a) {
  SparseMat s;
  s.rows.resize(a.rows());
  s.cols.resize(a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) {
        s.rows[i].emplace_back(j, a.at(i, j));
        s.cols[j].emplace_back(i, a.at(i, j));
      }
  return s;
}

void push_term(SparseRow& r, int var, const Rat& c) { r.emplace_back(var, c); }

SparseRow canonical(SparseRow r) {
  std::sort(r.begin(), r.end(), [](auto& x, auto& y) { return x.first < y.first; });
  SparseRow out;
  for (auto& e : r) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!e.second.is_zero()) {
      out.push_back(e);
    }
  }
  return out;
}

Rat trace_product(const RatMatrix& x, const RatMatrix& y) {
  Rat t;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (!x.at(i, j).is_zero() && !y.at(j, i).is_zero()) t += x.at(i, j) * y.at(j, i);
  return t;
}

// dim E / J(E) for a matrix algebra E given by a basis (trace form criterion).
int semisimple_quotient_dim(const std::vector<RatMatrix>& e) {
  int k = static_cast<int>(e.size());
  RatMatrix gram(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      Rat t = trace_product(e[a], e[b]);
      gram.at(a, b) = t;
      gram.at(b, a) = t;
    }
  return rank(gram);
}

}  // namespace

HomBasis hom_basis(const Module& m, const Module& n) {
  if (m.alg != n.alg && m.alg->name != n.alg->name)
    throw AlgebraMismatch("hom_basis: modules over different algebras");
  const HopfAlgebra& a = *m.alg;
  int dm = m.dim, dn = n.dim;
  HomBasis hb{dm, dn, {}};
  if (dm == 0 || dn == 0) return hb;
  RowReducer rr(dm * dn);
  // Unknown T[i][j] (i in target, j in source) has index i*dm + j.
  for (int g : generator_order(a)) {
    SparseMat am = sparse_of(m.actions[g]);
    SparseMat bn = sparse_of(n.actions[g]);
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dm; ++j) {
        SparseRow eq;
        for (auto& [k, v] : am.cols[j]) push_term(eq, i * dm + k, v);
        for (auto& [k, v] : bn.rows[i]) push_term(eq, k * dm + j, -v);
        eq = canonical(std::move(eq));
        if (!eq.empty()) rr.add(std::move(eq));
      }
  }
  for (auto& v : rr.kernel()) {
    RatMatrix t(dn, dm);
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dm; ++j) t.at(i, j) = v[std::size_t(i) * dm + j];
    hb.basis.push_back(std::move(t));
  }
  return hb;
}

bool is_intertwiner(const Module& m, const Module& n, const RatMatrix& t) {
  if (t.rows() != n.dim || t.cols() != m.dim) return false;
  for (int g = 0; g < m.alg->ngens(); ++g)
    if (!(t * m.actions[g] == n.actions[g] * t)) return false;
  return true;
}

static const PimCache& cache_of(const HopfAlgebra& a) { return a.pim_cache(); }

const PimCache& HopfAlgebra::pim_cache() const {
  std::call_once(cache_once_, [this] { cache_ = build_pim_cache(*this); });
  return *cache_;
}

RatMatrix radical(const Module& m) {
  if (m.dim == 0) return RatMatrix(0, 0);
  auto words = word_actions(m);
  RowReducer rr(m.dim);
  std::vector<RatVec> cols;
  for (auto& j : cache_of(*m.alg).jacobson) {
    RatMatrix x = element_action(words, j);
    for (int c = 0; c < m.dim; ++c) {
      RatVec v = x.column(c);
      if (rr.add_dense(v)) cols.push_back(std::move(v));
    }
  }
  return RatMatrix::from_columns(cols, m.dim);
}

RatMatrix socle(const Module& m) {
  if (m.dim == 0) return RatMatrix(0, 0);
  auto words = word_actions(m);
  RowReducer rr(m.dim);
  for (auto& j : cache_of(*m.alg).jacobson) {
    RatMatrix x = element_action(words, j);
    for (int r = 0; r < m.dim; ++r) rr.add_dense(x.row(r));
  }
  return RatMatrix::from_columns(rr.kernel(), m.dim);
}

Module submodule(const Module& m, const RatMatrix& b) {
  Module out{m.alg, b.cols(), {}};
  if (b.cols() == 0) {
    out.actions.assign(m.alg->ngens(), RatMatrix(0, 0));
    return out;
  }
  RatMatrix l = left_inverse(b);
  for (auto& act : m.actions) out.actions.push_back(l * (act * b));
  return out;
}

Quotient quotient(const Module& m, const RatMatrix& u) {
  RowReducer rr(m.dim);
  for (int c = 0; c < u.cols(); ++c) rr.add_dense(u.column(c));
  std::vector<int> comp;
  for (int i = 0; i < m.dim; ++i) {
    SparseRow e{{i, Rat(1)}};
    if (rr.add(e)) comp.push_back(i);
  }
  int q = static_cast<int>(comp.size());
  RatMatrix full(m.dim, m.dim);
  full.set_block(0, 0, u);
  for (int k = 0; k < q; ++k) full.at(comp[k], u.cols() + k) = Rat(1);
  RatMatrix inv = *inverse(full);
  RatMatrix proj = inv.block(u.cols(), 0, q, m.dim);
  RatMatrix sec(m.dim, q);
  for (int k = 0; k < q; ++k) sec.at(comp[k], k) = Rat(1);
  Quotient out{Module{m.alg, q, {}}, proj, sec};
  for (auto& act : m.actions) {
    RatMatrix sel(m.dim, q);
    for (int k = 0; k < q; ++k)
      for (int i = 0; i < m.dim; ++i) sel.at(i, k) = act.at(i, comp[k]);
    out.module.actions.push_back(proj * sel);
  }
  return out;
}

std::shared_ptr<const PimCache> build_pim_cache(const HopfAlgebra& a) {
  auto c = std::make_shared<PimCache>();
  c->jacobson = jacobson_radical(a);
  const int n = a.dim;
  // Frobenius form: the first basis coordinate functional whose Gram matrix
  // lambda(w_a w_b) is invertible.
  std::optional<RatMatrix> ginv;
  for (int p = n - 1; p >= 0 && !ginv; --p) {
    RatMatrix g(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (auto& [k, v] : a.mult[std::size_t(x) * n + y])
          if (k == p) g.at(x, y) = v;
    ginv = inverse(g);
  }
  if (!ginv && !a.pims.empty()) throw Error("no Frobenius form found for " + a.name);
  // Dual basis: w^a = sum_c ginv[a][c] w_c.
  for (std::size_t j = 0; j < a.pims.size(); ++j) {
    const RatVec& e = a.pims[j].idempotent;
    std::vector<RatVec> prods(n);
    RowReducer rr(n);
    std::vector<RatVec> basis;
    for (int w = 0; w < n; ++w) {
      prods[w] = a.mul(a.basis_vec(w), e);
      if (rr.add_dense(prods[w])) basis.push_back(prods[w]);
    }
    RatMatrix bm = RatMatrix::from_columns(basis, n);
    RatMatrix l = left_inverse(bm);
    Module pm{nullptr, static_cast<int>(basis.size()), {}};
    for (int g = 0; g < a.ngens(); ++g) {
      RatMatrix act(pm.dim, pm.dim);
      for (int t = 0; t < pm.dim; ++t) {
        RatVec img = l * a.mul(a.generator(g), basis[t]);
        for (int s = 0; s < pm.dim; ++s) act.at(s, t) = img[s];
      }
      pm.actions.push_back(std::move(act));
    }
    c->pims.push_back(std::move(pm));
    c->pim_basis.push_back(basis);
    std::vector<RatVec> u(n, RatVec(n));
    for (int p = 0; p < n; ++p)
      for (int w = 0; w < n; ++w) {
        const Rat& coef = prods[w][p];
        if (coef.is_zero()) continue;
        for (int k = 0; k < n; ++k)
          if (!ginv->at(w, k).is_zero()) u[p][k] += coef * ginv->at(w, k);
      }
    c->retraction.push_back(std::move(u));
  }
  return c;
}

Module pim_module(AlgebraPtr alg, int j) {
  Module q = cache_of(*alg).pims.at(j);
  q.alg = alg;
  return q;
}

namespace {

Module pim_of(const Module& m, int j) { return pim_module(m.alg, j); }

// Columns rho(q_t) v for the basis q_t of A e_j: the module map A e_j -> M,
// x e_j -> x v (v must satisfy e_j v = v).
RatMatrix embedding(const std::vector<RatMatrix>& words, const std::vector<RatVec>& qbasis, const RatVec& v) {
  int dm = static_cast<int>(v.size());
  RatMatrix emb(dm, static_cast<int>(qbasis.size()));
  for (std::size_t t = 0; t < qbasis.size(); ++t) {
    RatVec col = element_action(words, qbasis[t]) * v;
    for (int i = 0; i < dm; ++i) emb.at(i, static_cast<int>(t)) = col[i];
  }
  return emb;
}

struct Piece {
  Module module;
  RatMatrix basis;  // in coordinates of the module being decomposed
};

std::vector<RatMatrix> endomorphisms(const Module& m) { return hom_basis(m, m).basis; }

RatMatrix power(const RatMatrix& x, int k) {
  RatMatrix r = RatMatrix::identity(x.rows());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

// Tries x for a Fitting split M = ker (x-l)^N + im (x-l)^N at a rational
// eigenvalue l; on success appends the refined pieces.
bool try_fitting(const Module& m, const RatMatrix& x, std::vector<Piece>& out);

void split_rest(const Module& m, std::vector<Piece>& out) {
  if (m.dim == 0) return;
  auto e = endomorphisms(m);
  if (semisimple_quotient_dim(e) == 1) {
    out.push_back({m, RatMatrix::identity(m.dim)});
    return;
  }
  // Candidates in a fixed order: basis elements, pairwise sums, products, then a
  // few pseudo-random small combinations.
  for (auto& x : e)
    if (try_fitting(m, x, out)) return;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (try_fitting(m, e[a] + e[b], out)) return;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = 0; b < e.size(); ++b)
      if (a != b && try_fitting(m, e[a] * e[b] + e[b], out)) return;
  std::uint64_t s = 0x9E3779B97F4A7C15ULL;
  for (int t = 0; t < 40; ++t) {
    RatMatrix acc(m.dim, m.dim);
    for (auto& x : e) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      int c = static_cast<int>((s >> 33) % 7) - 3;
      if (c != 0) acc += x * Rat(c);
    }
    if (try_fitting(m, acc, out)) return;
  }
  throw NonSplitField("decompose: endomorphism residue algebra does not split over Q");
}

bool try_fitting(const Module& m, const RatMatrix& x, std::vector<Piece>& out) {
  for (auto& lam : rational_roots(charpoly(x))) {
    RatMatrix y = power(x - RatMatrix::scalar(m.dim, lam), m.dim);
    int rk = rank(y);
    if (rk == 0 || rk == m.dim) continue;
    RatMatrix im = column_space(y);
    RatMatrix ker = RatMatrix::from_columns(kernel_basis(y), m.dim);
    for (const RatMatrix& b : {ker, im}) {
      std::vector<Piece> sub;
      split_rest(submodule(m, b), sub);
      for (auto& p : sub) out.push_back({p.module, b * p.basis});
    }
    return true;
  }
  return false;
}

}  // namespace

std::vector<int> projective_multiplicities(const Module& m) {
  const HopfAlgebra& a = *m.alg;
  std::vector<int> out;
  if (m.dim == 0) return std::vector<int>(a.pims.size(), 0);
  auto words = word_actions(m);
  for (auto& p : a.pims) out.push_back(rank(element_action(words, p.socle)));
  return out;
}

Cover projective_cover(const Module& m) {
  if (m.dim == 0) throw Error("projective_cover: zero module");
  const HopfAlgebra& a = *m.alg;
  const PimCache& c = cache_of(a);
  Quotient top = quotient(m, radical(m));
  auto words = word_actions(m);
  RowReducer rr(top.module.dim);
  std::vector<Module> parts;
  std::vector<RatMatrix> maps;
  Cover cov;
  for (std::size_t j = 0; j < a.pims.size(); ++j) {
    RatMatrix ej = element_action(words, a.pims[j].idempotent);
    for (int i = 0; i < m.dim; ++i) {
      RatVec v = ej.column(i);
      if (!rr.add_dense(top.projection * v)) continue;
      parts.push_back(pim_of(m, static_cast<int>(j)));
      maps.push_back(embedding(words, c.pim_basis[j], v));
      cov.pims.push_back(static_cast<int>(j));
    }
  }
  cov.projective = direct_sum(m.alg, parts);
  cov.map = RatMatrix(m.dim, cov.projective.dim);
  int col = 0;
  for (auto& mp : maps) {
    cov.map.set_block(0, col, mp);
    col += mp.cols();
  }
  return cov;
}

Decomposition decompose(const Module& m) {
  const HopfAlgebra& a = *m.alg;
  Decomposition dec;
  if (m.dim == 0) {
    dec.change_of_basis = RatMatrix(0, 0);
    return dec;
  }
  const PimCache& c = cache_of(a);
  auto words = word_actions(m);
  // 1. Projective summands: generators whose socle images are independent.
  RowReducer soc(m.dim);
  std::vector<std::pair<int, RatVec>> gens;
  for (std::size_t j = 0; j < a.pims.size(); ++j) {
    RatMatrix sj = element_action(words, a.pims[j].socle);
    if (sj.is_zero()) continue;
    RatMatrix ej = element_action(words, a.pims[j].idempotent);
    for (int i = 0; i < m.dim; ++i) {
      RatVec s = sj.column(i);
      if (!soc.add_dense(s)) continue;
      gens.emplace_back(static_cast<int>(j), ej.column(i));
    }
  }
  std::vector<RatMatrix> bases;
  RowReducer retr(m.dim);
  for (auto& [j, v] : gens) {
    Module q = pim_of(m, j);
    RatMatrix emb = embedding(words, c.pim_basis[j], v);
    dec.summands.push_back({q, j});
    bases.push_back(emb);
  }
  // 2. Retraction: for each generator choose a coordinate functional f_i with
  // f_i(rho(u_p s_j) m') independent across the copies of the same PIM.
  for (std::size_t j = 0; j < a.pims.size(); ++j) {
    std::vector<RatVec> socle_imgs;
    RatMatrix sj_act;
    for (auto& [jj, v] : gens) {
      if (jj != static_cast<int>(j)) continue;
      if (socle_imgs.empty()) sj_act = element_action(words, a.pims[j].socle);
      socle_imgs.push_back(sj_act * v);
    }
    if (socle_imgs.empty()) continue;
    const RatVec& sj = a.pims[j].socle;
    int p = 0;
    while (sj[p].is_zero()) ++p;
    RatMatrix up = element_action(words, c.retraction[j][p]);
    RatMatrix y = up * RatMatrix::from_columns(socle_imgs, m.dim);
    std::vector<int> rows = independent_columns(y.transpose());
    if (rows.size() != socle_imgs.size()) throw Error("decompose: projective retraction failed");
    for (int i : rows)
      for (int pp = 0; pp < a.dim; ++pp) {
        if (c.retraction[j][pp] == RatVec(a.dim)) continue;
        RatVec row(m.dim);
        const RatVec& u = c.retraction[j][pp];
        for (int w = 0; w < a.dim; ++w)
          if (!u[w].is_zero())
            for (int k = 0; k < m.dim; ++k)
              if (!words[w].at(i, k).is_zero()) row[k] += u[w] * words[w].at(i, k);
        retr.add_dense(row);
      }
  }
  // 3. The complement of the projective part is the kernel of the retraction.
  RatMatrix rest_basis = RatMatrix::from_columns(retr.kernel(), m.dim);
  std::vector<Piece> pieces;
  if (rest_basis.cols() > 0) split_rest(submodule(m, rest_basis), pieces);
  for (auto& p : pieces) {
    dec.summands.push_back({p.module, -1});
    bases.push_back(rest_basis * p.basis);
  }
  dec.change_of_basis = RatMatrix(m.dim, m.dim);
  int col = 0;
  for (auto& b : bases) {
    dec.change_of_basis.set_block(0, col, b);
    col += b.cols();
  }
  // Certificate: C is invertible and intertwines M with the block sum.
  if (col != m.dim || rank(dec.change_of_basis) != m.dim) throw Error("decompose: summands do not span");
  for (int g = 0; g < a.ngens(); ++g) {
    std::vector<RatMatrix> blocks;
    for (auto& s : dec.summands) blocks.push_back(s.module.actions[g]);
    if (!(m.actions[g] * dec.change_of_basis == dec.change_of_basis * block_diagonal(blocks)))
      throw Error("decompose: change of basis is not a module isomorphism");
  }
  return dec;
}

bool is_indecomposable(const Module& m) {
  if (m.dim == 0) return false;
  return semisimple_quotient_dim(endomorphisms(m)) == 1;
}

bool is_simple(const Module& m) { return m.dim > 0 && radical(m).cols() == 0 && is_indecomposable(m); }

std::optional<RatMatrix> find_isomorphism(const Module& m, const Module& n) {
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return RatMatrix(0, 0);
  auto h = hom_basis(m, n).basis;
  if (h.empty()) return std::nullopt;
  std::uint64_t s = 12345;
  for (int attempt = 0; attempt < 10; ++attempt) {
    RatMatrix t(n.dim, m.dim);
    for (auto& x : h) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      int c = attempt == 0 ? 1 : static_cast<int>((s >> 33) % 7) - 3;
      if (c != 0) t += x * Rat(c);
    }
    if (rank(t) == m.dim) return t;
  }
  // Exhaustive {-1,0,1} combinations over a bounded number of basis maps.
  int k = std::min<int>(static_cast<int>(h.size()), 7);
  int total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  for (int code = 1; code < total; ++code) {
    RatMatrix t(n.dim, m.dim);
    int cc = code;
    for (int i = 0; i < k; ++i, cc /= 3)
      if (cc % 3 != 0) t += h[i] * Rat(cc % 3 == 1 ? 1 : -1);
    if (rank(t) == m.dim) return t;
  }
  return std::nullopt;
}

}  // namespace nichols
