#include "nichols/json_io.hpp"

#include "nichols/errors.hpp"

namespace nichols {

json to_json(const Rat& x) { return x.to_string(); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw Error("expected a rational as \"p/q\" or an integer");
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("matrix must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : 0;
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw Error("ragged matrix");
    for (int k = 0; k < cols; ++k) m.at(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

json algebra_to_json(const HopfAlgebra& alg) {
  json out;
  out["name"] = alg.name;
  out["dim"] = alg.dim;
  out["basis_labels"] = alg.basis_labels;
  out["generators"] = alg.gen_labels;
  json mult = json::array();
  for (int a = 0; a < alg.dim; ++a) {
    json row = json::array();
    for (int b = 0; b < alg.dim; ++b) {
      json v = json::array();
      for (const auto& x : to_dense(alg.mult[std::size_t(a) * alg.dim + b], alg.dim)) v.push_back(to_json(x));
      row.push_back(std::move(v));
    }
    mult.push_back(std::move(row));
  }
  out["mult"] = std::move(mult);
  json comult = json::array();
  for (int a = 0; a < alg.dim; ++a) {
    RatVec flat = to_dense(alg.comult[a], alg.dim * alg.dim);
    json m = json::array();
    for (int b = 0; b < alg.dim; ++b) {
      json row = json::array();
      for (int c = 0; c < alg.dim; ++c) row.push_back(to_json(flat[std::size_t(b) * alg.dim + c]));
      m.push_back(std::move(row));
    }
    comult.push_back(std::move(m));
  }
  out["comult"] = std::move(comult);
  json counit = json::array();
  for (const auto& x : alg.counit) counit.push_back(to_json(x));
  out["counit"] = std::move(counit);
  out["antipode"] = to_json(alg.antipode);
  return out;
}

json module_to_json(const Module& m) {
  json out;
  out["algebra"] = m.alg->name;
  out["dim"] = m.dim;
  json acts = json::object();
  for (int g = 0; g < m.alg->ngens(); ++g) acts[m.alg->gen_labels[g]] = to_json(m.actions[g]);
  out["actions"] = std::move(acts);
  return out;
}

Module module_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("actions"))
    throw Error("module JSON needs 'algebra' and 'actions'");
  AlgebraPtr alg;
  try {
    alg = algebra_by_name(j["algebra"].get<std::string>());
  } catch (const OutOfRange& e) {
    throw InvalidLabel(e.what());
  }
  Module m;
  m.alg = alg;
  const auto& acts = j["actions"];
  if (!acts.is_object()) throw Error("'actions' must map generator names to matrices");
  for (const auto& [name, _] : acts.items())
    if (alg->gen_index(name) < 0) throw InvalidLabel("unknown generator '" + name + "' for " + alg->name);
  m.dim = j.contains("dim") ? j["dim"].get<int>() : -1;
  for (int g = 0; g < alg->ngens(); ++g) {
    const auto& name = alg->gen_labels[g];
    if (!acts.contains(name)) throw Error("missing action of generator '" + name + "'");
    RatMatrix a = matrix_from_json(acts[name]);
    if (m.dim < 0) m.dim = a.rows();
    if (a.rows() != m.dim || a.cols() != m.dim) throw Error("action of '" + name + "' has the wrong shape");
    m.actions.push_back(std::move(a));
  }
  auto chk = check_module(m);
  if (!chk.pass) throw Error("not a module: " + chk.detail);
  return m;
}

json to_json(const GreenElement& g) {
  json out = json::array();
  for (const auto& [l, c] : g.terms()) out.push_back({{"label", l.to_string()}, {"coeff", c}});
  return out;
}

GreenElement green_from_json(const json& j) {
  if (!j.is_array()) throw Error("Green element JSON must be a list of {label, coeff}");
  GreenElement g;
  for (const auto& t : j) g.add(Label::parse(t.at("label").get<std::string>()), t.at("coeff").get<long long>());
  return g;
}

json to_json(const IdealSpec& s) {
  json out;
  out["proper"] = s.proper;
  if (!s.proper) return out;
  out["default"] = s.default_bound.to_string();
  json sup = json::array();
  for (const auto& [e, b] : s.support) sup.push_back({{"eta", e.to_string()}, {"bound", b.to_string()}});
  out["support"] = std::move(sup);
  return out;
}

namespace {
Bound bound_from_json(const json& j) {
  if (j.is_number_integer()) return Bound::of(j.get<int>());
  if (j.is_string()) return Bound::parse(j.get<std::string>());
  throw Error("bound must be a positive integer or \"inf\"");
}
}  // namespace

IdealSpec ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("proper")) throw Error("ideal JSON needs 'proper'");
  if (!j["proper"].get<bool>()) return IdealSpec::improper();
  Bound dflt = j.contains("default") ? bound_from_json(j["default"]) : Bound::of(1);
  std::map<Eta, Bound> f;
  if (j.contains("support"))
    for (const auto& t : j["support"]) {
      const auto& e = t.at("eta");
      Eta eta = e.is_string() ? Eta::parse(e.get<std::string>()) : Eta::finite(Rat(e.get<long long>()));
      f[eta] = bound_from_json(t.at("bound"));
    }
  return IdealSpec::proper_from(dflt, f);
}

json skeleton_to_json(const ProjSkeleton& sk) {
  json out;
  out["algebra"] = sk.alg->name;
  out["objects"] = sk.names;
  json dims = json::array();
  for (int i = 0; i < sk.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < sk.size(); ++k) row.push_back(sk.homs[i][k].basis.size());
    dims.push_back(std::move(row));
  }
  out["hom_dims"] = std::move(dims);
  json comp = json::array();
  for (const auto& [key, table] : sk.comp) {
    auto [i, j, k] = key;
    if (table.empty() || table[0].empty()) continue;
    json t = json::array();
    for (const auto& row : table) {
      json r = json::array();
      for (const auto& v : row) {
        json c = json::array();
        for (const auto& x : v) c.push_back(to_json(x));
        r.push_back(std::move(c));
      }
      t.push_back(std::move(r));
    }
    comp.push_back({{"source", sk.names[i]}, {"middle", sk.names[j]}, {"target", sk.names[k]}, {"constants", std::move(t)}});
  }
  out["composition"] = std::move(comp);
  return out;
}

}  // namespace nichols
