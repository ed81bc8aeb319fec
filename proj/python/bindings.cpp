#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glp/closed.hpp"
#include "glp/error.hpp"
#include "glp/kripke.hpp"
#include "glp/reduction.hpp"
#include "glp/worm.hpp"

namespace py = pybind11;

namespace {

std::vector<glp::Level> entries(const glp::NWorm& w) { return w.entries(); }

glp::NWorm worm(const std::vector<glp::Level>& v) { return glp::NWorm(v); }

glp::Formula formula(const std::string& text, const std::string& order) {
  return glp::parse(text, *glp::make_provider(order));
}

glp::Worm relabelled(const glp::Worm& w, const glp::OrderProvider& p,
                     glp::NWorm (*op)(const glp::NWorm&)) {
  auto map = glp::signature_of(p, w.modals);
  return glp::unhat_worm(op(glp::hat_worm(w, map)), map);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Decision procedure and worm calculus for closed GLP formulas";

  py::register_exception<glp::Error>(m, "GlpError", PyExc_ValueError);

  m.def("normalize", [](const std::vector<glp::Level>& w) {
    return entries(glp::normalize(worm(w)).worm());
  }, py::arg("worm"), "Worm normal form of a worm given as a list of naturals.");
  m.def("is_wnf", [](const std::vector<glp::Level>& w) { return glp::is_wnf(worm(w)); },
        py::arg("worm"));
  m.def("worm_compare", [](glp::Level alpha, const std::vector<glp::Level>& a,
                           const std::vector<glp::Level>& b) {
    return std::string(glp::to_string(glp::worm_compare(alpha, worm(a), worm(b))));
  }, py::arg("alpha"), py::arg("a"), py::arg("b"),
        "'Lt' when b -> <alpha>a is provable, 'Eq' for equivalent worms, else 'Gt'.");
  m.def("worm_conj", [](const std::vector<glp::Level>& a, const std::vector<glp::Level>& b) {
    return entries(glp::worm_conj(worm(a), worm(b)));
  }, py::arg("a"), py::arg("b"));
  m.def("worm_entails", [](const std::vector<glp::Level>& a, const std::vector<glp::Level>& b) {
    return glp::worm_entails(worm(a), worm(b));
  }, py::arg("a"), py::arg("b"));

  m.def("nf", [](const std::string& text, const std::string& order) {
    auto p = glp::make_provider(order);
    glp::Worm w = relabelled(glp::parse_worm(text, *p), *p,
                             [](const glp::NWorm& x) { return glp::normalize(x).worm(); });
    return glp::print(glp::to_formula(w));
  }, py::arg("worm"), py::arg("order") = "omega", "Normal form of a worm written as text.");

  m.def("decide", [](const std::string& text, const std::string& order) {
    auto p = glp::make_provider(order);
    return glp::decide(glp::parse(text, *p), *p).provable;
  }, py::arg("formula"), py::arg("order") = "omega");
  m.def("is_consistent", [](const std::string& text, const std::string& order) {
    auto p = glp::make_provider(order);
    return glp::is_consistent(glp::parse(text, *p), *p);
  }, py::arg("formula"), py::arg("order") = "omega");

  m.def("bcw", [](const std::string& text, const std::string& order) {
    auto p = glp::make_provider(order);
    auto h = glp::hat(glp::parse(text, *p), *p);
    return glp::print(glp::unhat(glp::to_formula(glp::bcw(h.formula)), h.map));
  }, py::arg("formula"), py::arg("order") = "omega");
  m.def("wnf", [](const std::string& text, const std::string& order) {
    auto p = glp::make_provider(order);
    auto h = glp::hat(glp::parse(text, *p), *p);
    std::vector<std::string> out;
    for (const auto& c : glp::formula_wnf(h.formula))
      out.push_back(glp::print(glp::unhat(glp::to_formula(c), h.map)));
    return out;
  }, py::arg("formula"), py::arg("order") = "omega", "Clauses A -> B1 | ... | Bm.");

  m.def("zero_diamond_worm", [](const std::string& text, const std::string& order) {
    auto p = glp::make_provider(order);
    return glp::print(glp::to_formula(glp::zero_diamond_worm(glp::parse(text, *p), *p)));
  }, py::arg("formula"), py::arg("order") = "omega");

  m.def("reduction_target", [](const std::string& text, const std::string& order, bool mplus) {
    auto p = glp::make_provider(order);
    return glp::print(glp::reduction_target(glp::parse(text, *p), *p,
                                            mplus ? glp::Bridge::MPlus : glp::Bridge::NPlus));
  }, py::arg("formula"), py::arg("order") = "omega", py::arg("mplus") = false);

  m.def("countermodel", [](const std::string& text, const std::string& order,
                           unsigned max_worlds) -> py::object {
    auto p = glp::make_provider(order);
    auto cm = glp::countermodel_search(glp::parse(text, *p), *p, max_worlds);
    if (!cm) return py::none();
    return py::make_tuple(glp::to_json(cm->model), cm->model.worlds()[cm->world]);
  }, py::arg("formula"), py::arg("order") = "omega",
        py::arg("max_worlds") = glp::kDefaultMaxWorlds,
        "(model JSON, refuting world), or None when no frame up to max_worlds refutes.");

  m.def("check_model", [](const std::string& model_json, const std::string& text) -> py::object {
    glp::JModel model = glp::model_from_json(model_json);
    glp::Formula f = formula(text, "omega");
    glp::Level top = 0;
    for (const auto& mod : glp::modals_of(f)) top = std::max(top, glp::level_of(mod));
    model = model.widened(top);
    auto r = glp::is_valid_on(model, f);
    if (r.valid) return py::none();
    return py::str(model.worlds()[*r.refuting_world]);
  }, py::arg("model"), py::arg("formula"), "None if valid, else the first refuting world.");
}
