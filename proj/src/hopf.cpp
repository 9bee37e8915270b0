#include "nichols/hopf.hpp"

#include <functional>
#include <map>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

// A word is a sequence of generator indices; a linear combination of words is
// what a rewrite rule produces.
using Word = std::vector<int>;
using WordComb = std::vector<std::pair<Rat, Word>>;
using Elem = std::map<int, Rat>;  // sparse element keyed by basis index

// Rewrite rule for an adjacent pair (i, j) with i >= j.
using Rule = std::function<WordComb(int, int)>;

void accumulate(Elem& e, int k, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

// Reduce a word to normal form: strictly increasing generator indices, encoded
// as a bitmask.
void normalize(const Word& w, const Rat& c, const Rule& rule, Elem& out) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] < w[k + 1]) continue;
    for (auto& [coef, rep] : rule(w[k], w[k + 1])) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      nw.insert(nw.end(), rep.begin(), rep.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
      normalize(nw, c * coef, rule, out);
    }
    return;
  }
  int mask = 0;
  for (int g : w) mask |= 1 << g;
  accumulate(out, mask, c);
}

SparseRow to_row(const Elem& e) { return SparseRow(e.begin(), e.end()); }

struct GenData {
  std::string label;
  Elem comult;  // keys b*dim+c
  Rat counit;
  Elem antipode;
};

struct Builder {
  std::string name;
  std::vector<GenData> gens;
  Rule rule;
};

// Builds structure constants from a presentation whose normal words (bitmasks
// over the generators) form a basis. Comultiplication, counit and antipode are
// extended from the generators multiplicatively (anti-multiplicatively for S).
std::shared_ptr<HopfAlgebra> build(const Builder& b) {
  auto alg = std::make_shared<HopfAlgebra>();
  int ng = static_cast<int>(b.gens.size());
  int dim = 1 << ng;
  alg->name = b.name;
  alg->dim = dim;
  for (auto& g : b.gens) alg->gen_labels.push_back(g.label);
  for (int g = 0; g < ng; ++g) alg->gen_basis.push_back(1 << g);
  for (int a = 0; a < dim; ++a) {
    Word w;
    std::string label;
    for (int g = 0; g < ng; ++g)
      if (a & (1 << g)) {
        w.push_back(g);
        label += (label.empty() ? "" : "*") + b.gens[g].label;
      }
    alg->spelling.push_back(w);
    alg->basis_labels.push_back(label.empty() ? "1" : label);
  }
  alg->mult.resize(std::size_t(dim) * dim);
  for (int a = 0; a < dim; ++a)
    for (int c = 0; c < dim; ++c) {
      Word w = alg->spelling[a];
      w.insert(w.end(), alg->spelling[c].begin(), alg->spelling[c].end());
      Elem out;
      normalize(w, Rat(1), b.rule, out);
      alg->mult[std::size_t(a) * dim + c] = to_row(out);
    }
  auto mul_elem = [&](const Elem& x, const Elem& y) {
    Elem out;
    for (auto& [i, cx] : x)
      for (auto& [j, cy] : y)
        for (auto& [k, cm] : alg->mult[std::size_t(i) * dim + j]) accumulate(out, k, cx * cy * cm);
    return out;
  };
  auto mul_tensor = [&](const Elem& x, const Elem& y) {
    Elem out;
    for (auto& [i, cx] : x)
      for (auto& [j, cy] : y) {
        const SparseRow& l = alg->mult[std::size_t(i / dim) * dim + j / dim];
        const SparseRow& r = alg->mult[std::size_t(i % dim) * dim + j % dim];
        for (auto& [p, cl] : l)
          for (auto& [q, cr] : r) accumulate(out, p * dim + q, cx * cy * cl * cr);
      }
    return out;
  };
  alg->comult.resize(dim);
  alg->counit.assign(dim, Rat());
  alg->antipode = RatMatrix(dim, dim);
  for (int a = 0; a < dim; ++a) {
    Elem d{{0, Rat(1)}};
    Elem s{{0, Rat(1)}};
    Rat e(1);
    for (int g : alg->spelling[a]) {
      d = mul_tensor(d, b.gens[g].comult);
      s = mul_elem(b.gens[g].antipode, s);
      e *= b.gens[g].counit;
    }
    alg->comult[a] = to_row(d);
    alg->counit[a] = e;
    for (auto& [k, c] : s) alg->antipode.at(k, a) = c;
  }
  return alg;
}

Elem single(int k, const Rat& c = Rat(1)) { return Elem{{k, c}}; }

Elem tensor_terms(std::initializer_list<std::tuple<int, int, Rat>> terms, int dim) {
  Elem e;
  for (auto& [x, y, c] : terms) accumulate(e, x * dim + y, c);
  return e;
}

}  // namespace

int HopfAlgebra::gen_index(const std::string& label) const {
  for (int g = 0; g < ngens(); ++g)
    if (gen_labels[g] == label) return g;
  return -1;
}

RatVec HopfAlgebra::basis_vec(int a) const {
  RatVec v(dim);
  v[a] = Rat(1);
  return v;
}

RatVec HopfAlgebra::mul(const RatVec& x, const RatVec& y) const {
  RatVec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Rat c = x[i] * y[j];
      for (auto& [k, m] : mult[std::size_t(i) * dim + j]) out[k] += c * m;
    }
  }
  return out;
}

Rat HopfAlgebra::apply_counit(const RatVec& x) const {
  Rat s;
  for (int i = 0; i < dim; ++i)
    if (!x[i].is_zero()) s += x[i] * counit[i];
  return s;
}

RatMatrix HopfAlgebra::left_mult(const RatVec& x) const {
  RatMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    RatVec col = mul(x, basis_vec(j));
    for (int i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

RatVec add(const RatVec& x, const RatVec& y) {
  RatVec out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

RatVec scale(const Rat& c, const RatVec& x) {
  RatVec out = x;
  for (auto& v : out) v *= c;
  return out;
}

AlgebraPtr build_Km(int m) {
  if (m < 1 || m > 6) throw OutOfRange("build_Km: m must lie in 1..6");
  int dim = 1 << (m + 1);
  Builder b;
  b.name = "K" + std::to_string(m);
  // Generator 0 is K, generator i is xi_i.
  GenData k{"K", tensor_terms({{1, 1, Rat(1)}}, dim), Rat(1), single(1)};
  b.gens.push_back(k);
  for (int i = 1; i <= m; ++i) {
    int xi = 1 << i;
    GenData g;
    g.label = "xi" + std::to_string(i);
    g.comult = tensor_terms({{1, xi, Rat(1)}, {xi, 0, Rat(1)}}, dim);
    g.counit = Rat(0);
    g.antipode = single(1 | xi, Rat(-1));  // S(xi) = -K xi
    b.gens.push_back(g);
  }
  b.rule = [](int i, int j) -> WordComb {
    if (i == j) {
      if (i == 0) return {{Rat(1), {}}};  // K^2 = 1
      return {};                          // xi^2 = 0
    }
    return {{Rat(-1), {j, i}}};  // K xi = -xi K, xi_i xi_j = -xi_j xi_i
  };
  auto alg = build(b);
  RatVec kvec = alg->basis_vec(1);
  alg->pivot = kvec;
  RatVec top = alg->basis_vec(dim - 2);  // xi_1 ... xi_m
  for (int r = 0; r < 2; ++r) {
    RatVec e = scale(Rat(1, 2), add(alg->one(), scale(Rat(r == 0 ? 1 : -1), kvec)));
    alg->pims.push_back({Pim::Kind::Proj, r, e, alg->mul(top, e)});
  }
  return alg;
}

AlgebraPtr build_DK1(bool corrupt) {
  const int dim = 16;
  enum { A = 0, B = 1, C = 2, D = 3 };
  Builder bl;
  bl.name = corrupt ? "DK1-corrupt" : "DK1";
  int a = 1 << A, b = 1 << B, c = 1 << C, d = 1 << D;
  bl.gens.push_back({"a", tensor_terms({{a, b, Rat(1)}, {0, a, Rat(1)}}, dim), Rat(0),
                     single(a | b, Rat(-1))});  // S(a) = -ab
  bl.gens.push_back({"b", tensor_terms({{b, b, Rat(1)}}, dim), Rat(1), single(b)});
  bl.gens.push_back({"c", tensor_terms({{c, c, Rat(1)}}, dim), Rat(1), single(c)});
  // S(d) = -dc, written in normal order as +cd.
  bl.gens.push_back({"d", tensor_terms({{d, c, Rat(1)}, {0, d, Rat(1)}}, dim), Rat(0),
                     single(c | d, Rat(1))});
  bl.rule = [corrupt](int i, int j) -> WordComb {
    if (i == j) {
      if (i == B || i == C) return {{Rat(1), {}}};
      return {};
    }
    if (i == C && j == B) return {{Rat(1), {B, C}}};
    if (i == D && j == A) {
      // da = 1 - bc - ad
      if (corrupt) return {{Rat(1), {}}, {Rat(-1), {A, D}}};
      return {{Rat(1), {}}, {Rat(-1), {B, C}}, {Rat(-1), {A, D}}};
    }
    return {{Rat(-1), {j, i}}};
  };
  auto alg = build(bl);
  RatVec one = alg->one(), bv = alg->basis_vec(b), bc = alg->basis_vec(b | c);
  RatVec ad = alg->basis_vec(a | d);
  alg->pivot = bv;
  RatVec da = alg->mul(alg->basis_vec(d), alg->basis_vec(a));
  for (int r = 0; r < 2; ++r) {
    Rat sg(r == 0 ? 1 : -1);
    RatVec side = scale(Rat(1, 2), add(one, scale(sg, bv)));
    RatVec blk = scale(Rat(1, 2), add(one, bc));
    RatVec e = alg->mul(blk, side);
    alg->pims.push_back({Pim::Kind::Proj, r, e, alg->mul(ad, e)});
  }
  for (int r = 0; r < 2; ++r) {
    Rat sg(r == 0 ? 1 : -1);
    RatVec side = scale(Rat(1, 2), add(one, scale(sg, bv)));
    RatVec blk = scale(Rat(1, 2), add(one, scale(Rat(-1), bc)));
    RatVec e = alg->mul(alg->mul(blk, side), scale(Rat(1, 2), da));
    alg->pims.push_back({Pim::Kind::Steinberg, r, e, e});
  }
  return alg;
}

AlgebraPtr build_group_algebra_Z2() {
  Builder b;
  b.name = "Z2";
  b.gens.push_back({"g", tensor_terms({{1, 1, Rat(1)}}, 2), Rat(1), single(1)});
  b.rule = [](int, int) -> WordComb { return {{Rat(1), {}}}; };
  auto alg = build(b);
  alg->pivot = alg->one();
  return alg;
}

AlgebraPtr algebra_by_name(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, AlgebraPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  AlgebraPtr alg;
  if (name == "DK1") {
    alg = build_DK1();
  } else if (name.size() >= 2 && name[0] == 'K' &&
             name.find_first_not_of("0123456789", 1) == std::string::npos) {
    alg = build_Km(std::stoi(name.substr(1)));
  } else {
    throw InvalidLabel("unknown algebra '" + name + "'");
  }
  cache.emplace(name, alg);
  return alg;
}

bool AxiomReport::pass() const {
  for (auto& i : items)
    if (!i.pass) return false;
  return true;
}

AxiomReport check_hopf_axioms(const HopfAlgebra& h) {
  const int n = h.dim;
  AxiomReport rep;
  auto basis_mul = [&](int i, int j) -> const SparseRow& { return h.mult[std::size_t(i) * n + j]; };
  auto mul_vec = [&](const Elem& x, const Elem& y) {
    Elem out;
    for (auto& [i, cx] : x)
      for (auto& [j, cy] : y)
        for (auto& [k, c] : basis_mul(i, j)) accumulate(out, k, cx * cy * c);
    return out;
  };
  auto from_row = [](const SparseRow& r) { return Elem(r.begin(), r.end()); };
  auto delta = [&](const Elem& x) {
    Elem out;
    for (auto& [i, cx] : x)
      for (auto& [k, c] : h.comult[i]) accumulate(out, k, cx * c);
    return out;
  };
  auto tensor_mul = [&](const Elem& x, const Elem& y) {
    Elem out;
    for (auto& [i, cx] : x)
      for (auto& [j, cy] : y)
        for (auto& [p, cl] : basis_mul(i / n, j / n))
          for (auto& [q, cr] : basis_mul(i % n, j % n)) accumulate(out, p * n + q, cx * cy * cl * cr);
    return out;
  };
  auto S = [&](const Elem& x) {
    Elem out;
    for (auto& [i, cx] : x)
      for (int k = 0; k < n; ++k)
        if (!h.antipode.at(k, i).is_zero()) accumulate(out, k, cx * h.antipode.at(k, i));
    return out;
  };
  auto eps = [&](const Elem& x) {
    Rat s;
    for (auto& [i, c] : x) s += c * h.counit[i];
    return s;
  };

  bool assoc = true;
  for (int a = 0; a < n && assoc; ++a)
    for (int b = 0; b < n && assoc; ++b)
      for (int c = 0; c < n && assoc; ++c) {
        Elem ab = from_row(basis_mul(a, b)), bc = from_row(basis_mul(b, c));
        assoc = mul_vec(ab, single(c)) == mul_vec(single(a), bc);
      }
  rep.items.push_back({"associativity", assoc});

  bool unit = true;
  for (int a = 0; a < n; ++a) {
    unit = unit && from_row(basis_mul(0, a)) == single(a) && from_row(basis_mul(a, 0)) == single(a);
  }
  rep.items.push_back({"unit", unit});

  bool coassoc = true, counit = true;
  for (int a = 0; a < n; ++a) {
    std::map<long long, Rat> l, r;
    for (auto& [k, c] : h.comult[a]) {
      int x = k / n, y = k % n;
      for (auto& [kk, cc] : h.comult[x]) {
        long long key = (static_cast<long long>(kk) * n) + y;
        auto [it, f] = l.emplace(key, c * cc);
        if (!f) it->second += c * cc;
      }
      for (auto& [kk, cc] : h.comult[y]) {
        long long key = static_cast<long long>(x) * n * n + kk;
        auto [it, f] = r.emplace(key, c * cc);
        if (!f) it->second += c * cc;
      }
    }
    std::erase_if(l, [](auto& e) { return e.second.is_zero(); });
    std::erase_if(r, [](auto& e) { return e.second.is_zero(); });
    coassoc = coassoc && l == r;
    Elem el, er;
    for (auto& [k, c] : h.comult[a]) {
      accumulate(el, k % n, h.counit[k / n] * c);
      accumulate(er, k / n, h.counit[k % n] * c);
    }
    counit = counit && el == single(a) && er == single(a);
  }
  rep.items.push_back({"coassociativity", coassoc});
  rep.items.push_back({"counit", counit});

  bool compat = from_row(h.comult[0]) == single(0) && h.counit[0].is_one();
  for (int a = 0; a < n && compat; ++a)
    for (int b = 0; b < n && compat; ++b) {
      Elem ab = from_row(basis_mul(a, b));
      compat = delta(ab) == tensor_mul(from_row(h.comult[a]), from_row(h.comult[b])) &&
               eps(ab) == h.counit[a] * h.counit[b];
    }
  rep.items.push_back({"bialgebra compatibility", compat});

  bool antipode = true;
  for (int a = 0; a < n; ++a) {
    Elem l, r;
    for (auto& [k, c] : h.comult[a]) {
      Elem sx = S(single(k / n)), sy = S(single(k % n));
      for (auto& [i, v] : mul_vec(sx, single(k % n))) accumulate(l, i, c * v);
      for (auto& [i, v] : mul_vec(single(k / n), sy)) accumulate(r, i, c * v);
    }
    Elem expect;
    accumulate(expect, 0, h.counit[a]);
    antipode = antipode && l == expect && r == expect;
  }
  rep.items.push_back({"antipode", antipode});

  bool anti = true;
  for (int a = 0; a < n && anti; ++a)
    for (int b = 0; b < n && anti; ++b)
      anti = S(from_row(basis_mul(a, b))) == mul_vec(S(single(b)), S(single(a)));
  rep.items.push_back({"antipode anti-homomorphism", anti});

  // Pivot: group-like g with S^2(x) = g x g^{-1}; g^{-1} = S(g).
  Elem g;
  for (int i = 0; i < n; ++i)
    if (!h.pivot[i].is_zero()) g.emplace(i, h.pivot[i]);
  Elem ginv = S(g);
  Elem gg;
  for (auto& [i, c] : g)
    for (auto& [j, d] : g) accumulate(gg, i * n + j, c * d);
  bool pivotal = delta(g) == gg;
  for (int a = 0; a < n && pivotal; ++a)
    pivotal = S(S(single(a))) == mul_vec(mul_vec(g, single(a)), ginv);
  rep.items.push_back({"pivotal element", pivotal});
  return rep;
}

std::vector<RatVec> jacobson_radical(const HopfAlgebra& h) {
  const int n = h.dim;
  // tr(L_x L_y) = tr(L_{xy}); tr(L_{w_c}) = sum_e [w_e](w_c w_e).
  RatVec tr(n);
  for (int c = 0; c < n; ++c)
    for (int e = 0; e < n; ++e)
      for (auto& [k, v] : h.mult[std::size_t(c) * n + e])
        if (k == e) tr[c] += v;
  RatMatrix gram(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (auto& [k, v] : h.mult[std::size_t(a) * n + b]) gram.at(a, b) += v * tr[k];
  return kernel_basis(gram);
}

}  // namespace nichols
