#include "nichols/ideal.hpp"

#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

Bound Bound::of(int v) {
  if (v < 1) throw OutOfRange("ideal bound must be a positive integer or inf");
  return {false, v};
}

Bound Bound::parse(const std::string& s) {
  if (s == "inf" || s == "infty" || s == "oo") return inf();
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InvalidLabel("bad bound '" + s + "'");
  }
  if (used != s.size()) throw InvalidLabel("bad bound '" + s + "'");
  return of(v);
}

std::string Bound::to_string() const { return infinite ? "inf" : std::to_string(value); }

std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
  if (a.infinite || b.infinite) return int(a.infinite) <=> int(b.infinite);
  return a.value <=> b.value;
}

IdealSpec IdealSpec::proper_from(Bound dflt, const std::map<Eta, Bound>& f) {
  IdealSpec s;
  s.default_bound = dflt;
  for (const auto& [e, b] : f)
    if (!(b == dflt)) s.support.emplace(e, b);
  return s;
}

Bound IdealSpec::f(const Eta& e) const {
  auto it = support.find(e);
  return it == support.end() ? default_bound : it->second;
}

bool IdealSpec::contains(const Label& l) const {
  if (!proper) return true;
  switch (l.kind) {
    case Label::Kind::Proj:
    case Label::Kind::Steinberg: return true;
    case Label::Kind::MType: return f(l.eta).exceeds(l.n);
    default: return false;
  }
}

std::string IdealSpec::to_string() const {
  if (!proper) return "Improper";
  std::ostringstream os;
  os << "Proper(default " << default_bound.to_string();
  for (const auto& [e, b] : support) os << ", f(" << e.to_string() << ")=" << b.to_string();
  os << ")";
  return os.str();
}

IdealSpec ideal_closure(const std::vector<Label>& generators) {
  std::map<Eta, Bound> f;
  for (const auto& l : generators) {
    switch (l.kind) {
      case Label::Kind::Simple:
      case Label::Kind::SyzPos:
      case Label::Kind::SyzNeg: return IdealSpec::improper();
      case Label::Kind::MType: {
        Bound b = Bound::of(l.n + 1);
        auto [it, fresh] = f.emplace(l.eta, b);
        if (!fresh && it->second < b) it->second = b;
        break;
      }
      default: break;
    }
  }
  return IdealSpec::proper_from(Bound::of(1), f);
}

bool ideal_contains(const IdealSpec& spec, const GreenElement& x) {
  for (const auto& [l, c] : x.terms())
    if (c < 0) throw NegativeCoefficient("membership needs a nonnegative element, got " + x.to_string());
  for (const auto& [l, c] : x.terms())
    if (!spec.contains(l)) return false;
  return true;
}

namespace {

// An eta outside both supports.
Eta fresh_eta(const IdealSpec& a, const IdealSpec& b) {
  for (long long k = 0;; ++k) {
    Eta e = Eta::finite(Rat(k));
    if (!a.support.count(e) && !b.support.count(e)) return e;
  }
}

std::vector<Eta> probe_points(const IdealSpec& a, const IdealSpec& b) {
  std::vector<Eta> pts;
  for (const auto& [e, _] : a.support) pts.push_back(e);
  for (const auto& [e, _] : b.support) pts.push_back(e);
  pts.push_back(fresh_eta(a, b));
  return pts;
}

}  // namespace

bool ideal_subset(const IdealSpec& a, const IdealSpec& b) {
  if (!b.proper) return true;
  if (!a.proper) return false;
  for (const auto& e : probe_points(a, b))
    if (b.f(e) < a.f(e)) return false;
  return true;
}

std::optional<Label> distinguishing_label(const IdealSpec& a, const IdealSpec& b) {
  if (a.proper != b.proper) return Label::V(0);
  if (!a.proper) return std::nullopt;
  for (const auto& e : probe_points(a, b)) {
    Bound fa = a.f(e), fb = b.f(e);
    if (fa == fb) continue;
    // M_k with k the smaller (finite) value: member of the larger side only
    int k = fa < fb ? fa.value : fb.value;
    return Label::M(k, 0, e);
  }
  return std::nullopt;
}

std::optional<Label> unit_witness(const Label& l) {
  switch (l.kind) {
    case Label::Kind::Simple: return l;
    case Label::Kind::SyzPos:
    case Label::Kind::SyzNeg: return dual_label(l);
    default: return std::nullopt;
  }
}

Rat quantum_trace(const Module& m, const RatMatrix& t) {
  if (t.rows() != m.dim || t.cols() != m.dim || !is_intertwiner(m, m, t))
    throw NotEndomorphism("map is not an endomorphism of the module");
  RatMatrix k = element_action(m, m.alg->pivot);
  Rat tr;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) tr += k(i, j) * t(j, i);
  return tr;
}

Rat qdim(const Module& m) { return quantum_trace(m, RatMatrix::identity(m.dim)); }

bool is_negligible(const Module& m) {
  RatMatrix k = element_action(m, m.alg->pivot);
  for (const auto& t : hom_basis(m, m).basis) {
    Rat tr;
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j) tr += k(i, j) * t(j, i);
    if (!tr.is_zero()) return false;
  }
  return true;
}

bool is_quasi_dominated(const Module& m) {
  for (const auto& s : decompose(m).summands)
    if (!is_simple(s.module) && !is_negligible(s.module)) return false;
  return true;
}

}  // namespace nichols
