#include "nichols/green.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <tuple>

#include "nichols/errors.hpp"

namespace nichols {

GreenElement::GreenElement(const Label& l, long long c) { add(l, c); }

GreenElement GreenElement::from_labels(const std::vector<Label>& ls) {
  GreenElement g;
  for (const auto& l : ls) g.add(l, 1);
  return g;
}

long long GreenElement::coeff(const Label& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? 0 : it->second;
}

void GreenElement::add(const Label& l, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(l, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

GreenElement& GreenElement::operator+=(const GreenElement& o) {
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

GreenElement& GreenElement::operator-=(const GreenElement& o) {
  for (const auto& [l, c] : o.terms_) add(l, -c);
  return *this;
}

GreenElement operator*(long long c, const GreenElement& a) {
  GreenElement out;
  for (const auto& [l, k] : a.terms_) out.add(l, c * k);
  return out;
}

std::string GreenElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // positive terms first, each group in label order
  for (bool negative : {false, true})
    for (const auto& [l, c] : terms_) {
      if ((c < 0) != negative) continue;
      long long a = c < 0 ? -c : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      if (a != 1) os << a << "*";
      os << l.to_string();
      first = false;
    }
  return os.str();
}

GreenElement dual(const GreenElement& x) {
  GreenElement out;
  for (const auto& [l, c] : x.terms()) out.add(dual_label(l), c);
  return out;
}

long long dimension_character(const GreenElement& x) {
  long long d = 0;
  for (const auto& [l, c] : x.terms()) d += c * l.dim();
  return d;
}

namespace {

using K = Label::Kind;

int p(int k) { return k & 1; }

bool is_syz(const Label& l) { return l.kind == K::SyzPos || l.kind == K::SyzNeg; }

long long proj_square_coeff(const HopfAlgebra& alg) {
  if (alg.name == "DK1") return 2;
  // K_m: 2^(m-1); dim K_m = 2^(m+1)
  long long c = 1;
  for (int d = alg.dim; d > 4; d >>= 1) c <<= 1;
  return c;
}

GreenElement table(Label a, Label b, const HopfAlgebra& alg) {
  if (b.kind < a.kind || (b.kind == a.kind && b < a)) std::swap(a, b);
  const int R = a.r + b.r;
  GreenElement out;
  if (a.kind == K::Simple) {
    Label l = b;
    l.r = p(l.r + a.r);
    out.add(l, 1);
    return out;
  }
  if (a.kind == K::Proj) {
    switch (b.kind) {
      case K::Proj: {
        long long c = proj_square_coeff(alg);
        out.add(Label::P(0), c);
        out.add(Label::P(1), c);
        break;
      }
      case K::SyzPos:
      case K::SyzNeg:
        out.add(Label::P(R + p(b.n + 1)), b.n);
        out.add(Label::P(R + p(b.n)), b.n + 1);
        break;
      case K::MType:
        out.add(Label::P(0), b.n);
        out.add(Label::P(1), b.n);
        break;
      case K::Steinberg:
        out.add(Label::St(0), 2);
        out.add(Label::St(1), 2);
        break;
      default: break;
    }
    return out;
  }
  if (is_syz(a) && is_syz(b)) {
    const int s = a.n, n = b.n;
    if (a.kind == b.kind) {
      int sign = a.kind == K::SyzPos ? 1 : -1;
      out.add(Label::Omega(sign * (s + n), R), 1);
      out.add(Label::P(R + p(s + n)), static_cast<long long>(s) * n);
    } else {
      // a is the positive syzygy since SyzPos sorts first
      out.add(Label::Omega(s - n, R), 1);
      long long c = s >= n ? static_cast<long long>(s + 1) * n : static_cast<long long>(n + 1) * s;
      out.add(Label::P(R + p(s + n + 1)), c);
    }
    return out;
  }
  if (is_syz(a) && b.kind == K::MType) {
    const int s = a.n, n = b.n;
    out.add(Label::M(n, R + p(s), b.eta), 1);
    int pr = a.kind == K::SyzPos ? p(s + 1) : p(s);
    out.add(Label::P(R + pr), static_cast<long long>(s) * n);
    return out;
  }
  if (is_syz(a) && b.kind == K::Steinberg) {
    const int s = a.n;
    out.add(Label::St(R + s), s + 1);
    out.add(Label::St(R + s + 1), s);
    return out;
  }
  if (a.kind == K::MType && b.kind == K::MType) {
    const int n = std::min(a.n, b.n), t = std::max(a.n, b.n);
    if (!(a.eta == b.eta)) {
      out.add(Label::P(R), static_cast<long long>(n) * t);
    } else {
      out.add(Label::P(R), static_cast<long long>(n) * (t - 1));
      out.add(Label::M(n, 0, a.eta), 1);
      out.add(Label::M(n, 1, a.eta), 1);
    }
    return out;
  }
  if (a.kind == K::MType && b.kind == K::Steinberg) {
    out.add(Label::St(0), a.n);
    out.add(Label::St(1), a.n);
    return out;
  }
  if (a.kind == K::Steinberg && b.kind == K::Steinberg) {
    out.add(Label::P(R + 1), 1);
    return out;
  }
  throw Error("no table entry for " + a.to_string() + " * " + b.to_string());
}

}  // namespace

GreenElement closed_form(const Label& a, const Label& b, const HopfAlgebra& alg) {
  validate_label(a, alg);
  validate_label(b, alg);
  return table(a, b, alg);
}

GreenElement green_mul(const GreenElement& a, const GreenElement& b, const HopfAlgebra& alg) {
  GreenElement out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) out += (ca * cb) * closed_form(la, lb, alg);
  return out;
}

namespace {
std::mutex oracle_mu;
std::map<std::tuple<std::string, Label, Label>, GreenElement> oracle_cache;
}  // namespace

GreenElement green_mul_oracle(const Label& a, const Label& b, AlgebraPtr alg) {
  validate_label(a, *alg);
  validate_label(b, *alg);
  auto key = std::make_tuple(alg->name, std::min(a, b), std::max(a, b));
  {
    std::lock_guard lock(oracle_mu);
    auto it = oracle_cache.find(key);
    if (it != oracle_cache.end()) return it->second;
  }
  GreenElement g = GreenElement::from_labels(identify(tensor(realize(a, alg), realize(b, alg))));
  std::lock_guard lock(oracle_mu);
  oracle_cache.emplace(key, g);
  return g;
}

GreenElement green_mul_oracle(const GreenElement& a, const GreenElement& b, AlgebraPtr alg) {
  GreenElement out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) out += (ca * cb) * green_mul_oracle(la, lb, alg);
  return out;
}

std::vector<Label> label_sweep(const HopfAlgebra& alg, int max_s, int max_n, const std::vector<Eta>& etas) {
  std::vector<Label> out;
  for (int r = 0; r < 2; ++r) out.push_back(Label::V(r));
  for (int r = 0; r < 2; ++r) out.push_back(Label::P(r));
  bool classified = alg.name == "K2" || alg.name == "DK1";
  if (classified) {
    for (int s = 1; s <= max_s; ++s)
      for (int r = 0; r < 2; ++r) {
        out.push_back(Label::Omega(s, r));
        out.push_back(Label::Omega(-s, r));
      }
    for (int n = 1; n <= max_n; ++n)
      for (int r = 0; r < 2; ++r)
        for (const auto& e : etas) out.push_back(Label::M(n, r, e));
  }
  if (alg.name == "DK1")
    for (int r = 0; r < 2; ++r) out.push_back(Label::St(r));
  std::sort(out.begin(), out.end());
  return out;
}

bool PresentationReport::pass() const {
  for (const auto& c : checks)
    if (!c.closed_form_zero || !c.oracle_zero) return false;
  return true;
}

namespace {

using Mul = std::function<GreenElement(const GreenElement&, const GreenElement&)>;

struct Gens {
  GreenElement one, g, x, y, z, x2;
  GreenElement X(int n, const Eta& e) const { return GreenElement(Label::M(n, 0, e)); }
};

// Each relation evaluated with a given multiplication.
struct Relation {
  std::string text;
  std::function<GreenElement(const Gens&, const Mul&)> eval;
};

std::string eta_text(const Eta& e) { return e.to_string(); }

std::vector<Relation> relations(bool dk1, int max_param, const std::vector<Eta>& etas) {
  std::vector<Relation> rs;
  auto add = [&](std::string t, std::function<GreenElement(const Gens&, const Mul&)> f) {
    rs.push_back({std::move(t), std::move(f)});
  };
  add("g^2 - 1", [](const Gens& G, const Mul& m) { return m(G.g, G.g) - G.one; });
  if (dk1) {
    add("x^3 - 2x(1+g)", [](const Gens& G, const Mul& m) {
      return m(m(G.x, G.x), G.x) - 2 * m(G.x, G.one + G.g);
    });
    add("x(y - 1 - 2g)", [](const Gens& G, const Mul& m) { return m(G.x, G.y - G.one - 2 * G.g); });
    add("x(y - z)", [](const Gens& G, const Mul& m) { return m(G.x, G.y - G.z); });
  }
  add("yz - 1 - 2x^2", [](const Gens& G, const Mul& m) { return m(G.y, G.z) - G.one - 2 * G.x2; });
  for (int n = 1; n <= max_param; ++n)
    for (const auto& e : etas) {
      std::string X = "X'(" + std::to_string(n) + "," + eta_text(e) + ")";
      if (dk1)
        add("x" + X + " - " + std::to_string(n) + "(1+g)x", [n, e](const Gens& G, const Mul& m) {
          return m(G.x, G.X(n, e)) - n * m(G.one + G.g, G.x);
        });
      add("y" + X + " - " + std::to_string(n) + "gx^2 - g" + X, [n, e](const Gens& G, const Mul& m) {
        return m(G.y, G.X(n, e)) - n * m(G.g, G.x2) - m(G.g, G.X(n, e));
      });
      add("z" + X + " - " + std::to_string(n) + "x^2 - g" + X, [n, e](const Gens& G, const Mul& m) {
        return m(G.z, G.X(n, e)) - n * G.x2 - m(G.g, G.X(n, e));
      });
    }
  for (int n = 1; n <= max_param; ++n)
    for (int s = 1; s <= max_param; ++s)
      for (const auto& e : etas)
        for (const auto& a : etas) {
          if (e == a) continue;
          std::string t = "X'(" + std::to_string(n) + "," + eta_text(e) + ")X'(" + std::to_string(s) + "," +
                          eta_text(a) + ") - " + std::to_string(n * s) + "gx^2";
          add(t, [n, s, e, a](const Gens& G, const Mul& m) {
            return m(G.X(n, e), G.X(s, a)) - (n * s) * m(G.g, G.x2);
          });
        }
  for (int n = 1; n <= max_param; ++n)
    for (int t = n; t <= max_param; ++t)
      for (const auto& e : etas) {
        std::string Xn = "X'(" + std::to_string(n) + "," + eta_text(e) + ")";
        std::string Xt = "X'(" + std::to_string(t) + "," + eta_text(e) + ")";
        std::string txt = Xn + Xt + " - " + std::to_string(n * (t - 1)) + "gx^2 - " + Xn + " - g" + Xn;
        add(txt, [n, t, e](const Gens& G, const Mul& m) {
          return m(G.X(n, e), G.X(t, e)) - (n * (t - 1)) * m(G.g, G.x2) - G.X(n, e) - m(G.g, G.X(n, e));
        });
      }
  return rs;
}

Gens generators(bool dk1, const Mul& m) {
  Gens G;
  G.one = GreenElement(Label::V(0));
  G.g = GreenElement(Label::V(1));
  G.y = GreenElement(Label::Omega(1, 0));
  G.z = GreenElement(Label::Omega(-1, 0));
  if (dk1) {
    G.x = GreenElement(Label::St(0));
    G.x2 = m(G.x, G.x);
  } else {
    G.x2 = GreenElement(Label::P(1));
  }
  return G;
}

}  // namespace

PresentationReport verify_presentation(AlgebraPtr alg, int max_param, const std::vector<Eta>& etas, bool with_oracle) {
  PresentationReport rep;
  rep.algebra = alg->name;
  bool dk1 = alg->name == "DK1";
  if (!dk1 && alg->name != "K2") throw InvalidLabel("presentation is known only for K2 and DK1");
  Mul closed = [&](const GreenElement& a, const GreenElement& b) { return green_mul(a, b, *alg); };
  Mul oracle = [&](const GreenElement& a, const GreenElement& b) { return green_mul_oracle(a, b, alg); };
  Gens Gc = generators(dk1, closed);
  Gens Go = with_oracle ? generators(dk1, oracle) : Gc;
  for (const auto& rel : relations(dk1, max_param, etas)) {
    RelationCheck c;
    c.relation = rel.text;
    GreenElement v = rel.eval(Gc, closed);
    c.closed_form_zero = v.is_zero();
    if (!c.closed_form_zero) c.residue = v.to_string();
    if (with_oracle) {
      GreenElement w = rel.eval(Go, oracle);
      c.oracle_zero = w.is_zero();
      if (!c.oracle_zero && c.residue.empty()) c.residue = w.to_string();
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace nichols
