#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "umlogic/constructions.hpp"
#include "umlogic/io.hpp"
#include "umlogic/semantics.hpp"
#include "umlogic/validity.hpp"

namespace py = pybind11;
using namespace umlogic;

namespace {

// Structured results cross the boundary as JSON and come back as plain
// Python objects; rationals stay strings.
py::object to_python(const json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

json from_python(const py::object& obj) {
  return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

Formula as_formula(const py::object& f) {
  if (py::isinstance<py::str>(f)) return parse(f.cast<std::string>());
  return f.cast<Formula>();
}

std::size_t world_of(const Model& m, const std::string& w) { return m.space->index_of(w); }

Model cantor_model(std::size_t depth, const py::dict& valuation, const std::string& names) {
  if (names != "worlds" && names != "bits") throw std::invalid_argument("names must be 'worlds' or 'bits'");
  auto s = std::make_shared<const UltrametricSpace>(
      cantor_space(depth, names == "bits" ? CantorNaming::Bits : CantorNaming::Worlds));
  return Model(s, valuation_from_json(from_python(valuation), *s));
}

}  // namespace

PYBIND11_MODULE(umlogic, m) {
  m.doc() = "Graded modal logic over finite ultra-metric spaces";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GradeError>(m, "GradeError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<SpaceError>(m, "SpaceError", PyExc_KeyError);
  py::register_exception<AxiomError>(m, "AxiomError", PyExc_ValueError);
  py::register_exception<MorphismError>(m, "MorphismError", PyExc_ValueError);
  py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded", PyExc_RuntimeError);

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](const Formula& f) { return print(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + print(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", &Formula::hash)
      .def("desugar", [](const Formula& f) { return desugar(f); })
      .def("subformulas", [](const Formula& f) { return subformulas(f); })
      .def("atoms", [](const Formula& f) { return atoms(f); })
      .def("grades", [](const Formula& f) {
        std::vector<std::string> out;
        for (const auto& g : grade_set(f)) out.push_back(g.str());
        return out;
      });

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));

  py::class_<Model>(m, "Model")
      .def_static("cantor", &cantor_model, py::arg("depth"), py::arg("valuation") = py::dict(),
                  py::arg("names") = "worlds")
      .def_static("from_json", [](const std::string& text) { return model_from_json(json::parse(text)); })
      .def("to_json", [](const Model& md) { return model_to_json(md).dump(2); })
      .def_property_readonly("points", [](const Model& md) { return md.space->points(); })
      .def("distance",
           [](const Model& md, const std::string& a, const std::string& b) {
             return md.space->distance(world_of(md, a), world_of(md, b)).str();
           })
      .def("ball",
           [](const Model& md, const std::string& w, const std::string& eps) {
             return sorted_names(*md.space, ball(*md.space, world_of(md, w), Grade::parse(eps)));
           })
      .def("holds",
           [](const Model& md, const std::string& w, const py::object& f) { return holds(md, w, as_formula(f)); })
      .def("truthset",
           [](const Model& md, const py::object& f) {
             return sorted_names(*md.space, truthset(md, as_formula(f)).points);
           })
      .def("stability",
           [](const Model& md, const std::string& w, const py::object& f) {
             return to_python(to_json(stability_degree(md, world_of(md, w), as_formula(f))));
           })
      .def("plausibility",
           [](const Model& md, const std::string& w, const py::object& f) {
             return to_python(to_json(plausibility_degree(md, world_of(md, w), as_formula(f))));
           })
      .def("violations", [](const Model& md) { return to_python(violations_to_json(validate_space(*md.space))); });

  m.def(
      "valid",
      [](const Model& md, const py::object& f, std::uint64_t cap) {
        ValidityOptions opts;
        opts.max_valuations = cap;
        const Formula formula = as_formula(f);
        ValidityResult r;
        {
          py::gil_scoped_release release;
          r = valid_in_model(*md.space, formula, opts);
        }
        return to_python(to_json(r, *md.space));
      },
      py::arg("model"), py::arg("formula"), py::arg("cap") = std::uint64_t{1} << 22);

  m.def("match_axiom", [](const py::object& f) {
    json out = json::array();
    for (const auto& a : match_axiom(as_formula(f))) out.push_back({{"schema", a.name}, {"bindings", to_json(a.bindings)}});
    return to_python(out);
  });
  m.def("instantiate_axiom", [](const std::string& name, const py::dict& bindings) {
    return instantiate_axiom(name, bindings_from_json(from_python(bindings)));
  });
  m.def("check_proof", [](const py::object& lines) { return to_python(to_json(check_proof(proof_from_json(from_python(lines))))); });

  m.def("disjoint_union", [](const std::vector<Model>& parts) { return disjoint_union(parts); });
  m.def("subspace", [](const Model& md, const std::string& w, const std::string& eps) {
    return epsilon_subspace(md, world_of(md, w), Grade::parse(eps));
  });
  m.def(
      "check_morphism",
      [](const Model& src, const Model& tgt, const py::dict& point_map, bool frame) {
        const PointMap pm = point_map_from_json(from_python(point_map), *src.space, *tgt.space);
        const auto v = frame ? check_frame_morphism(*src.space, *tgt.space, pm) : check_bounded_morphism(src, tgt, pm);
        return to_python(to_json(v, *src.space, *tgt.space));
      },
      py::arg("source"), py::arg("target"), py::arg("point_map"), py::arg("frame") = false);
}
