#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "silted/error.hpp"
#include "silted/fixtures.hpp"
#include "silted/render.hpp"
#include "silted/suite.hpp"

namespace py = pybind11;
using namespace silted;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
std::string silting_json(const std::string& text, bool tilting_only) {
    const Quiver q = parse_quiver(text);
    std::vector<SiltingObject> objects;
    if (tilting_only)
        for (const auto& t : tilting_modules_alg1(q)) objects.push_back(as_silting(t));
    else
        objects = silting_alg2(q);
    return silting_report(q, objects).dump();
}

std::string classify_json(const std::string& text, unsigned jobs) {
    const Quiver q = parse_quiver(text);
    dynkin_type(q);
    const TwoTermCategory cat(q, jobs);
    const auto records = classify_all(cat, silting_alg2(q), jobs);
    return classification_report(q, records, dedupe(records)).dump();
}

std::string ar_json(const std::string& text, bool two_term) {
    const Quiver q = parse_quiver(text);
    return to_json(two_term ? ar_quiver_two_term(q) : ar_quiver_mod(q)).dump();
}

}  // namespace

PYBIND11_MODULE(_silted, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NotDynkin>(m, "NotDynkin", PyExc_ValueError);
    py::register_exception<AssertionFailure>(m, "AssertionFailure", PyExc_RuntimeError);

    m.def("fixture_names", [] {
        std::vector<std::string> names;
        for (const auto& f : fixtures()) names.push_back(f.name);
        return names;
    });
    m.def("fixture_text", [](const std::string& name) { return quiver_to_text(fixture(name).quiver); });
    m.def("dynkin_type", [](const std::string& text) { return dynkin_type(parse_quiver(text)).canonical().to_string(); });
    m.def("silting_json", &silting_json, py::arg("text"), py::arg("tilting_only") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("classify_json", &classify_json, py::arg("text"), py::arg("jobs") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("ar_json", &ar_json, py::arg("text"), py::arg("two_term") = false);
    m.def(
        "run_suite",
        [](unsigned jobs) {
            SuiteReport r;
            {
                py::gil_scoped_release release;
                r = run_suite(jobs);
            }
            py::list out;
            for (const auto& c : r.criteria) out.append(py::make_tuple(c.id, c.title, c.pass, c.failures));
            return out;
        },
        py::arg("jobs") = 1);
}
