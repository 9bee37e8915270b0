#include "nichols/indec.hpp"

#include <algorithm>
#include <cctype>

#include "nichols/errors.hpp"

namespace nichols {

Eta Eta::parse(const std::string& s) {
  if (s == "inf" || s == "infty" || s == "oo") return inf();
  try {
    return finite(Rat::from_string(s));
  } catch (const std::exception&) {
    throw InvalidLabel("bad eta '" + s + "'");
  }
}

std::string Eta::to_string() const { return infinite ? "inf" : value.to_string(); }

std::strong_ordering operator<=>(const Eta& a, const Eta& b) {
  if (a.infinite || b.infinite) return int(a.infinite) <=> int(b.infinite);
  return a.value <=> b.value;
}

std::vector<Eta> standard_etas() {
  return {Eta::finite(Rat(0)), Eta::finite(Rat(1)), Eta::finite(Rat(-1)),
          Eta::finite(Rat(2, 3)), Eta::finite(Rat(5, 7)), Eta::inf()};
}

Label Label::Omega(int k, int r) {
  if (k == 0) return V(r);
  return {k > 0 ? Kind::SyzPos : Kind::SyzNeg, k > 0 ? k : -k, r & 1, {}};
}

int Label::dim() const {
  switch (kind) {
    case Kind::Simple: return 1;
    case Kind::Proj: return 4;
    case Kind::SyzPos:
    case Kind::SyzNeg: return 2 * n + 1;
    case Kind::MType: return 2 * n;
    case Kind::Steinberg: return 2;
  }
  return 0;
}

std::string Label::to_string() const {
  std::string rs = std::to_string(r);
  switch (kind) {
    case Kind::Simple: return "V(" + rs + ")";
    case Kind::Proj: return "P(" + rs + ")";
    case Kind::SyzPos: return "O(+" + std::to_string(n) + "," + rs + ")";
    case Kind::SyzNeg: return "O(-" + std::to_string(n) + "," + rs + ")";
    case Kind::MType: return "M(" + std::to_string(n) + "," + rs + "," + eta.to_string() + ")";
    case Kind::Steinberg: return "St(" + rs + ")";
  }
  return "?";
}

namespace {

int parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) throw InvalidLabel("bad label '" + whole + "'");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw InvalidLabel("bad label '" + whole + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw InvalidLabel("bad label '" + whole + "'");
  if (s.size() > 9) throw InvalidLabel("number too large in '" + whole + "'");
  return std::stoi(s);
}

int parse_parity(const std::string& s, const std::string& whole) {
  int r = parse_int(s, whole);
  if (r != 0 && r != 1) throw InvalidLabel("parity must be 0 or 1 in '" + whole + "'");
  return r;
}

}  // namespace

Label Label::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw InvalidLabel("bad label '" + text + "'");
  std::string head = s.substr(0, open);
  std::string body = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> args;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i)
    if (i == body.size() || body[i] == ',') {
      args.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw InvalidLabel("wrong number of arguments in '" + text + "'");
  };
  if (head == "V") {
    if (args.size() == 2 && args[0] == "2") return St(parse_parity(args[1], text));
    need(1);
    return V(parse_parity(args[0], text));
  }
  if (head == "P") {
    need(1);
    return P(parse_parity(args[0], text));
  }
  if (head == "St") {
    need(1);
    return St(parse_parity(args[0], text));
  }
  if (head == "O") {
    need(2);
    if (args[0].empty() || (args[0][0] != '+' && args[0][0] != '-'))
      throw InvalidLabel("syzygy index needs an explicit sign in '" + text + "'");
    int k = parse_int(args[0], text);
    if (k == 0) throw InvalidLabel("syzygy index must be nonzero in '" + text + "'");
    return Omega(k, parse_parity(args[1], text));
  }
  if (head == "M") {
    need(3);
    int n = parse_int(args[0], text);
    if (n < 1) throw InvalidLabel("M-type length must be positive in '" + text + "'");
    return M(n, parse_parity(args[1], text), Eta::parse(args[2]));
  }
  throw InvalidLabel("unknown label '" + text + "'");
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (auto c = int(a.kind) <=> int(b.kind); c != 0) return c;
  if (auto c = a.n <=> b.n; c != 0) return c;
  if (auto c = a.r <=> b.r; c != 0) return c;
  return a.eta <=> b.eta;
}

Label dual_label(const Label& l) {
  switch (l.kind) {
    case Label::Kind::SyzPos: return Label::Omega(-l.n, l.r);
    case Label::Kind::SyzNeg: return Label::Omega(l.n, l.r);
    case Label::Kind::MType: return Label::M(l.n, l.r + 1, l.eta);
    case Label::Kind::Steinberg: return Label::St(l.r + 1);
    default: return l;
  }
}

namespace {

bool is_dk1(const HopfAlgebra& a) { return a.name == "DK1"; }
bool is_k2(const HopfAlgebra& a) { return a.name == "K2"; }
bool is_km(const HopfAlgebra& a) { return a.name.size() >= 2 && a.name[0] == 'K'; }

Rat sign(int r) { return Rat(r % 2 == 0 ? 1 : -1); }

int parity_of(const Rat& eig) { return eig.is_one() ? 0 : 1; }

Module k2_realize(const Label& l, AlgebraPtr k2) {
  Module m{k2, l.dim(), {}};
  int d = m.dim;
  RatMatrix k(d, d), x1(d, d), x2(d, d);
  switch (l.kind) {
    case Label::Kind::Simple:
      k.at(0, 0) = sign(l.r);
      break;
    case Label::Kind::Proj:
      return pim_module(k2, l.r);
    case Label::Kind::SyzPos: {
      // top x_0..x_s, socle y_1..y_s; xi1 x_i = y_{i+1}, xi2 x_i = y_i.
      int s = l.n;
      for (int i = 0; i <= s; ++i) k.at(i, i) = sign(l.r + s);
      for (int i = 1; i <= s; ++i) k.at(s + i, s + i) = sign(l.r + s + 1);
      for (int i = 0; i <= s; ++i) {
        if (i + 1 <= s) x1.at(s + i + 1, i) = Rat(1);
        if (i >= 1) x2.at(s + i, i) = Rat(1);
      }
      break;
    }
    case Label::Kind::SyzNeg: {
      // top x_1..x_s, socle y_0..y_s; xi1 x_i = y_{i-1}, xi2 x_i = y_i.
      int s = l.n;
      for (int i = 0; i < s; ++i) k.at(i, i) = sign(l.r + s + 1);
      for (int i = 0; i <= s; ++i) k.at(s + i, s + i) = sign(l.r + s);
      for (int i = 1; i <= s; ++i) {
        x1.at(s + i - 1, i - 1) = Rat(1);
        x2.at(s + i, i - 1) = Rat(1);
      }
      break;
    }
    case Label::Kind::MType: {
      // a_1..a_n then b_1..b_n; xi1 a_i = b_i, xi2 a_i = eta b_i + b_{i-1}.
      // The top a_i has K = (-1)^(r+1): with this parity convention the
      // Omega-by-M rules and the presentation relations hold as labelled.
      int n = l.n;
      for (int i = 0; i < n; ++i) {
        k.at(i, i) = sign(l.r + 1);
        k.at(n + i, n + i) = sign(l.r);
      }
      RatMatrix& id = l.eta.infinite ? x2 : x1;
      RatMatrix& other = l.eta.infinite ? x1 : x2;
      for (int i = 0; i < n; ++i) {
        id.at(n + i, i) = Rat(1);
        if (!l.eta.infinite && !l.eta.value.is_zero()) other.at(n + i, i) = l.eta.value;
        if (i >= 1) other.at(n + i - 1, i) = Rat(1);
      }
      break;
    }
    case Label::Kind::Steinberg:
      throw InvalidLabel("Steinberg modules do not exist over K2");
  }
  m.actions = {k, x1, x2};
  return m;
}

Label pim_label(const Pim& p) { return p.kind == Pim::Kind::Proj ? Label::P(p.r) : Label::St(p.r); }

// rad(X) basis and the induced maps top -> rad for every generator.
struct TopRad {
  Quotient top;
  RatMatrix rad;
};

TopRad top_rad(const Module& x) {
  RatMatrix rad = radical(x);
  return {quotient(x, rad), rad};
}

// Scalar by which a diagonalisable-by-assumption action acts on a nonzero vector.
int parity_on(const RatMatrix& k, const RatVec& v) {
  RatVec kv = k * v;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return parity_of(kv[i] / v[i]);
  throw Unclassified("zero vector");
}

Label k2_classify(const Module& x) {
  int d = x.dim;
  const RatMatrix& k = x.actions[0];
  const RatMatrix& x1 = x.actions[1];
  const RatMatrix& x2 = x.actions[2];
  if (d == 1) return Label::V(parity_of(k.at(0, 0)));
  RatMatrix top_word = x1 * x2;
  int rk = rank(top_word);
  if (d == 4 && rk == 1) {
    for (int c = 0; c < d; ++c) {
      RatVec v = top_word.column(c);
      if (v != RatVec(d)) return Label::P(parity_on(k, v));
    }
  }
  if (rk != 0) throw Unclassified("indecomposable K2-module of dimension " + std::to_string(d) + " not recognised");
  TopRad tr = top_rad(x);
  int h = tr.top.module.dim;
  if (h == 0) throw Unclassified("module has no top");
  int tpar = parity_of(tr.top.module.actions[0].at(0, 0));
  if (d % 2 == 1) {
    int s = (d - 1) / 2;
    if (h == s + 1) return Label::Omega(s, tpar + s);
    if (h == s) return Label::Omega(-s, tpar + s + 1);
    throw Unclassified("odd-dimensional module with unexpected top");
  }
  int n = d / 2;
  if (h != n) throw Unclassified("even-dimensional module with unexpected top");
  RatMatrix l = left_inverse(tr.rad);
  RatMatrix b1 = l * (x1 * tr.top.section);
  RatMatrix b2 = l * (x2 * tr.top.section);
  auto inv = inverse(b1);
  if (!inv) return Label::M(n, tpar + 1, Eta::inf());
  RatMatrix y = *inv * b2;
  auto poly = charpoly(y);
  auto roots = rational_roots(poly);
  if (roots.size() != 1) throw Unclassified("M-type parameter is not rational");
  return Label::M(n, tpar + 1, Eta::finite(roots[0]));
}

}  // namespace

void validate_label(const Label& l, const HopfAlgebra& alg) {
  if (is_dk1(alg) || is_k2(alg)) {
    if (l.kind == Label::Kind::Steinberg && !is_dk1(alg))
      throw InvalidLabel("Steinberg modules V(2,r) exist only over DK1");
  } else if (is_km(alg)) {
    if (l.kind != Label::Kind::Simple && l.kind != Label::Kind::Proj)
      throw InvalidLabel("only V(r) and P(r) are classified over " + alg.name);
  } else {
    throw InvalidLabel("no classification for algebra " + alg.name);
  }
  if ((l.kind == Label::Kind::SyzPos || l.kind == Label::Kind::SyzNeg || l.kind == Label::Kind::MType) && l.n < 1)
    throw InvalidLabel("index must be positive in " + l.to_string());
}

Module realize(const Label& l, AlgebraPtr alg) {
  validate_label(l, *alg);
  if (is_k2(*alg)) return k2_realize(l, alg);
  if (is_dk1(*alg)) {
    if (l.kind != Label::Kind::Steinberg) return inflate_pi(k2_realize(l, algebra_by_name("K2")));
    // basis u, v: a u = v, d v = 2u, b = diag(s, -s), c = -b.
    Module m{alg, 2, {}};
    RatMatrix a(2, 2), b(2, 2), c(2, 2), d(2, 2);
    a.at(1, 0) = Rat(1);
    d.at(0, 1) = Rat(2);
    b.at(0, 0) = sign(l.r);
    b.at(1, 1) = sign(l.r + 1);
    c = -b;
    m.actions = {a, b, c, d};
    return m;
  }
  // K_m, m != 2.
  if (l.kind == Label::Kind::Proj) return pim_module(alg, l.r);
  Module m{alg, 1, {}};
  m.actions.push_back(RatMatrix::scalar(1, sign(l.r)));
  for (int g = 1; g < alg->ngens(); ++g) m.actions.push_back(RatMatrix(1, 1));
  return m;
}

Label identify_indecomposable(const Module& m) {
  const HopfAlgebra& a = *m.alg;
  Label l;
  if (is_k2(a)) {
    l = k2_classify(m);
  } else if (is_dk1(a)) {
    if (in_r0(m)) {
      l = k2_classify(restrict_pi(m));
    } else {
      if (m.dim != 2) throw Unclassified("DK1-module outside r0 that is not Steinberg");
      // u spans the kernel of d; St(r) has b = (-1)^r on u.
      RatMatrix kd = RatMatrix::from_columns(kernel_basis(m.action("d")), 2);
      l = Label::St(parity_on(m.action("b"), kd.column(0)));
    }
  } else if (is_km(a)) {
    if (m.dim == 1) {
      l = Label::V(parity_of(m.actions[0].at(0, 0)));
    } else {
      auto mult = projective_multiplicities(m);
      int j = -1;
      for (std::size_t p = 0; p < mult.size(); ++p)
        if (mult[p] == 1) j = static_cast<int>(p);
      if (j < 0 || m.dim != (1 << (a.ngens() - 1))) throw Unclassified("not a simple or projective module");
      l = pim_label(a.pims[j]);
    }
  } else {
    throw Unclassified("no classification for algebra " + a.name);
  }
  if (!is_isomorphic(m, realize(l, m.alg)))
    throw Unclassified("candidate " + l.to_string() + " failed the isomorphism check");
  return l;
}

std::vector<Label> identify(const Module& m) {
  std::vector<Label> out;
  if (m.dim == 0) return out;
  Decomposition dec = decompose(m);
  for (auto& s : dec.summands) {
    if (s.pim >= 0)
      out.push_back(pim_label(m.alg->pims[s.pim]));
    else
      out.push_back(identify_indecomposable(s.module));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Hull injective_hull(const Module& m) {
  Cover cov = projective_cover(dual(m));
  Hull h{dual(cov.projective), {}};
  const HopfAlgebra& a = *m.alg;
  // M -> M** is rho(pivot); then the transpose of the cover map.
  h.map = cov.map.transpose() * element_action(m, a.pivot);
  return h;
}

Resolution resolution(int k, int r) {
  if (k == 0 || k > 8 || k < -8) throw OutOfRange("resolution: need 1 <= |k| <= 8");
  AlgebraPtr k2 = algebra_by_name("K2");
  Module x = realize(Label::V(r), k2);
  Resolution res;
  for (int stage = 0; stage < std::abs(k); ++stage) {
    if (k > 0) {
      Cover cov = projective_cover(x);
      std::vector<int> mult(k2->pims.size(), 0);
      for (int p : cov.pims) ++mult[p];
      res.stage_multiplicities.push_back(mult);
      RatMatrix ker = RatMatrix::from_columns(kernel_basis(cov.map), cov.projective.dim);
      x = submodule(cov.projective, ker);
    } else {
      Hull h = injective_hull(x);
      res.stage_multiplicities.push_back(projective_multiplicities(h.injective));
      x = quotient(h.injective, column_space(h.map)).module;
    }
  }
  res.syzygy = x;
  return res;
}

bool in_r0(const Module& m) {
  if (!is_dk1(*m.alg)) throw AlgebraMismatch("in_r0: module is not over DK1");
  return m.action("b") == m.action("c");
}

Module restrict_pi(const Module& m) {
  if (!in_r0(m)) throw NotInR0("restrict_pi: b and c act differently");
  Module out{algebra_by_name("K2"), m.dim, {}};
  out.actions = {m.action("b"), m.action("a"), m.action("d")};
  return out;
}

Module inflate_pi(const Module& m) {
  if (!is_k2(*m.alg)) throw AlgebraMismatch("inflate_pi: module is not over K2");
  Module out{algebra_by_name("DK1"), m.dim, {}};
  // generator order a, b, c, d
  out.actions = {m.actions[1], m.actions[0], m.actions[0], m.actions[2]};
  return out;
}

}  // namespace nichols
