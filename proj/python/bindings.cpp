#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nichols/errors.hpp"
#include "nichols/expr.hpp"
#include "nichols/verify.hpp"

namespace py = pybind11;
using namespace nichols;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list l;
      for (const auto& x : j) l.append(to_py(x));
      return l;
    }
    default: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
      return d;
    }
  }
}

json from_py(const py::handle& h) {
  return json::parse(py::module_::import("json").attr("dumps")(h).cast<std::string>());
}

py::dict green_dict(const GreenElement& g) {
  py::dict d;
  for (const auto& [l, c] : g.terms()) d[py::str(l.to_string())] = c;
  return d;
}

}  // namespace

PYBIND11_MODULE(nichols, m) {
  m.doc() = "Representations of K_m and DK1: decomposition, fusion, Green rings, tensor ideals";

  // Translators run newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SyntaxError>(m, "ExprSyntaxError", PyExc_ValueError);
  py::register_exception<InvalidLabel>(m, "InvalidLabel", PyExc_ValueError);

  py::class_<HopfAlgebra, std::shared_ptr<HopfAlgebra>>(m, "Algebra")
      .def_readonly("name", &HopfAlgebra::name)
      .def_readonly("dim", &HopfAlgebra::dim)
      .def_readonly("generators", &HopfAlgebra::gen_labels)
      .def_readonly("basis_labels", &HopfAlgebra::basis_labels)
      .def("axioms", [](const HopfAlgebra& a) {
        std::map<std::string, bool> out;
        for (const auto& it : check_hopf_axioms(a).items) out[it.axiom] = it.pass;
        return out;
      })
      .def("to_json", [](const HopfAlgebra& a) { return to_py(algebra_to_json(a)); });

  m.def("algebra", [](const std::string& name) { return std::const_pointer_cast<HopfAlgebra>(algebra_by_name(name)); },
        py::arg("name"), "K1..K6 or DK1");

  py::class_<Module>(m, "Module")
      .def_readonly("dim", &Module::dim)
      .def_property_readonly("algebra", [](const Module& x) { return x.alg->name; })
      .def("to_json", [](const Module& x) { return to_py(module_to_json(x)); })
      .def("identify", [](const Module& x) {
        std::vector<std::string> out;
        for (const auto& l : identify(x)) out.push_back(l.to_string());
        return out;
      })
      .def("is_negligible", &is_negligible)
      .def("is_quasi_dominated", &is_quasi_dominated)
      .def("qdim", [](const Module& x) { return qdim(x).to_string(); })
      .def("__matmul__", [](const Module& a, const Module& b) { return tensor(a, b); })
      .def("__add__", [](const Module& a, const Module& b) { return direct_sum(a.alg, {a, b}); });

  m.def("realize", [](const std::string& label, const std::string& alg) {
    return realize(Label::parse(label), algebra_by_name(alg));
  }, py::arg("label"), py::arg("algebra") = "K2");
  m.def("module", [](const std::string& expr, const std::string& alg) {
    return eval_module(*parse_expr(expr), algebra_by_name(alg));
  }, py::arg("expr"), py::arg("algebra") = "K2", "build the module of an expression like 'O(+1,0)*M(2,0,2/3)'");
  m.def("module_from_json", [](const py::object& obj) { return module_from_json(from_py(obj)); });
  m.def("tensor", &tensor);
  m.def("dual", py::overload_cast<const Module&>(&dual));

  m.def("dual_label", [](const std::string& l) { return dual_label(Label::parse(l)).to_string(); });
  m.def("green_mul", [](const std::string& expr, const std::string& alg) {
    return green_dict(eval_green(*parse_expr(expr), *algebra_by_name(alg)));
  }, py::arg("expr"), py::arg("algebra") = "K2", "closed-form Green ring value");
  m.def("oracle", [](const std::string& a, const std::string& b, const std::string& alg) {
    return green_dict(green_mul_oracle(Label::parse(a), Label::parse(b), algebra_by_name(alg)));
  }, py::arg("a"), py::arg("b"), py::arg("algebra") = "K2", "decompose realize(a) (x) realize(b)");
  m.def("fuse", [](const std::string& expr, const std::string& alg) {
    auto A = algebra_by_name(alg);
    auto e = parse_expr(expr);
    GreenElement orc = GreenElement::from_labels(identify(eval_module(*e, A)));
    GreenElement cf = eval_green(*e, *A);
    py::dict d;
    d["oracle"] = orc.to_string();
    d["closed_form"] = cf.to_string();
    d["agreement"] = orc == cf;
    return d;
  }, py::arg("expr"), py::arg("algebra") = "K2");

  m.def("ideal_closure", [](const std::vector<std::string>& labels) {
    std::vector<Label> ls;
    for (const auto& s : labels) ls.push_back(Label::parse(s));
    return to_py(to_json(ideal_closure(ls)));
  });
  m.def("ideal_contains", [](const py::object& spec, const std::string& expr) {
    return ideal_contains(ideal_from_json(from_py(spec)), eval_green(*parse_expr(expr), *algebra_by_name("K2")));
  });

  m.def("verify_auslander", [](int mm) {
    auto rep = verify_auslander_iso(mm);
    py::dict d;
    d["pass"] = rep.pass();
    d["dim_A"] = rep.dim_A;
    d["dim_Km"] = rep.dim_Km;
    d["checks"] = rep.checks;
    return d;
  });
  m.def("verify", [](const std::string& suite, int max_s, int max_n) {
    VerifyOptions o;
    o.max_s = max_s;
    o.max_n = max_n;
    std::vector<SuiteReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_suites(suite, o);
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass();
    return py::make_tuple(ok, report_text(reports));
  }, py::arg("suite") = "all", py::arg("max_s") = 4, py::arg("max_n") = 4);
}
