// Python extension: the CLI pipeline with JSON results, plus the parser.

#include "liesym/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace liesym;

namespace {

report::RunConfig config(const std::string& equation, const std::vector<std::string>& generators,
                         const std::string& fixture, const std::string& basis, const std::string& params,
                         std::optional<int> degree_cap) {
    report::RunConfig c;
    c.equation = equation;
    c.generators = generators;
    c.fixture = fixture;
    c.basis = basis;
    c.params = params;
    c.degree_cap = degree_cap;
    return c;
}

py::tuple to_tuple(const report::Result& r) {
    return py::make_tuple(r.json.dump(), r.text, static_cast<int>(r.outcome));
}

} // namespace

PYBIND11_MODULE(_liesym, m) {
    m.doc() = "Lie point symmetries of (1+2) linear evolution equations";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "run",
        [](const std::string& command, const std::string& equation, const std::vector<std::string>& generators,
           const std::string& fixture, const std::string& basis, const std::string& params,
           std::optional<int> degree_cap) {
            auto c = config(equation, generators, fixture, basis, params, degree_cap);
            report::Result r;
            {
                py::gil_scoped_release release;
                if (command == "verify")
                    r = report::run_verify(c);
                else if (command == "find")
                    r = report::run_find(c);
                else if (command == "reduce")
                    r = report::run_reduce(c);
                else if (command == "classify")
                    r = report::run_classify(c);
                else if (command == "report")
                    r = report::run_report(c);
                else
                    throw std::invalid_argument("unknown command '" + command + "'");
            }
            return to_tuple(r);
        },
        py::arg("command"), py::arg("equation") = "hpz", py::arg("generators") = std::vector<std::string>{},
        py::arg("fixture") = "", py::arg("basis") = "", py::arg("params") = "", py::arg("degree_cap") = py::none(),
        "Runs one pipeline command; returns (json text, human text, exit code).");

    m.def(
        "canonical", [](const std::string& text) { return render(parse(text)); }, py::arg("text"),
        "Parses an expression and renders its canonical form.");
    m.def(
        "equation", [](const std::string& name) { return equation_by_name(name).str(); }, py::arg("name"),
        "Text of a registry equation.");
}
