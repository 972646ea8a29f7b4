#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgr/catalog.hpp"
#include "cgr/report.hpp"
#include "cgr/specfile.hpp"

#include <memory>

namespace py = pybind11;

namespace {

// The bindings hold validated algebras behind shared_ptr and speak strings
// and JSON text at the boundary; exactness never leaves the C++ side.
std::shared_ptr<cgr::Algebra> load_from_text(const std::string& text) {
    cgr::SpecLoadResult r = cgr::load_spec_text(text);
    if (r.parse_error) throw py::value_error("parse error: " + *r.parse_error);
    if (r.validation_error) throw py::value_error("validation failure: " + *r.validation_error);
    return std::make_shared<cgr::Algebra>(std::move(*r.algebra));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic and center computation for crystalline graded rings";

    py::class_<cgr::Algebra, std::shared_ptr<cgr::Algebra>>(m, "Algebra")
        .def_property_readonly("name", &cgr::Algebra::name)
        .def_property_readonly("description", &cgr::Algebra::description)
        .def_property_readonly("order", [](const cgr::Algebra& a) { return a.group().order(); })
        .def_property_readonly("ring_rank", [](const cgr::Algebra& a) { return a.ring()->rank; })
        .def_property_readonly("ring_name", [](const cgr::Algebra& a) { return a.ring()->name(); })
        .def_property_readonly("abelian", [](const cgr::Algebra& a) { return a.group().is_abelian(); })
        .def_property_readonly("element_names",
                               [](const cgr::Algebra& a) { return a.group().names(); })
        .def_property_readonly("W",
                               [](const cgr::Algebra& a) {
                                   std::vector<std::string> w;
                                   for (int g : a.W()) w.push_back(a.group().name_of(g));
                                   return w;
                               })
        .def("f",
             [](const cgr::Algebra& a, const std::string& x, const std::string& s) {
                 auto xi = a.group().index_of(x);
                 auto si = a.group().index_of(s);
                 if (!xi || !si) throw py::value_error("unknown element name");
                 return cgr::to_string(a.f(*xi, *si));
             })
        .def("mul",
             [](const cgr::Algebra& a, const std::string& lhs, const std::string& rhs) {
                 return cgr::to_string(a, cgr::multiply(a, cgr::parse_graded_expression(a, lhs),
                                                        cgr::parse_graded_expression(a, rhs)));
             })
        .def(
            "center_report_json",
            [](const cgr::Algebra& a, const std::string& method) {
                return cgr::report_to_json(a, cgr::build_center_report(a, method));
            },
            py::arg("method") = "both")
        .def(
            "center_report_text",
            [](const cgr::Algebra& a, const std::string& method) {
                return cgr::report_to_text(a, cgr::build_center_report(a, method));
            },
            py::arg("method") = "both")
        .def("spec_json", [](const cgr::Algebra& a) { return cgr::serialize_spec(a); })
        .def("__repr__", [](const cgr::Algebra& a) {
            return "<cgr.Algebra '" + a.name() + "' over " + a.ring()->name() + ">";
        });

    m.def("load_spec", &load_from_text, py::arg("json_text"),
          "Parse and fully validate a ring-spec JSON document.");
    m.def("validate_spec", [](const std::string& text) {
        cgr::SpecLoadResult r = cgr::load_spec_text(text);
        py::dict d;
        d["ok"] = r.algebra.has_value();
        if (r.parse_error) d["parse_error"] = *r.parse_error;
        if (r.validation_error) d["validation_error"] = *r.validation_error;
        return d;
    });
    m.def("catalog", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const cgr::CatalogEntry& e : cgr::catalog_list()) out.emplace_back(e.name, e.description);
        return out;
    });
    m.def("catalog_spec", &cgr::catalog_emit, py::arg("name"));
    m.def("catalog_load", [](const std::string& name) {
        return std::make_shared<cgr::Algebra>(cgr::catalog_build(name));
    });

    py::register_exception<cgr::MethodUnavailable>(m, "MethodUnavailable");
}
