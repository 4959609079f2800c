#include "scx/cli/report.hpp"
#include "scx/coeff/parse.hpp"
#include "scx/equivariant/equivariant.hpp"
#include "scx/scomplex/io.hpp"
#include "scx/scomplex/ops.hpp"
#include "scx/scomplex/validate.hpp"
#include "scx/suites/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using nlohmann::json;

// Results cross the boundary as JSON text; the Python package decodes them.
namespace {

std::string invariants(const std::string& descriptor, const std::string& ring, const std::string& omega,
                       bool filtered) {
    scx::ReportOptions opt;
    opt.ring = scx::parse_ring(ring);
    opt.omega = scx::parse_omega(omega);
    opt.filtered = filtered;
    return scx::invariants_report(descriptor, opt).dump();
}

std::string cobordism(const std::string& data, const std::string& omega) {
    return scx::cobordism_report(scx::cobordism_from_json(json::parse(data)), scx::parse_omega(omega)).dump();
}

scx::SComplex valid_complex(const std::string& text) {
    scx::SComplex c = scx::complex_from_json(json::parse(text));
    scx::require_valid(c, "complex");
    return c;
}

}  // namespace

PYBIND11_MODULE(_scx, m) {
    py::register_exception<scx::ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("invariants", &invariants, py::arg("descriptor"), py::arg("ring") = "localT1", py::arg("omega") = "1/4",
          py::arg("filtered") = false);
    m.def("cobordism", &cobordism, py::arg("data"), py::arg("omega") = "1/4");
    m.def("validate", [](const std::string& text) { return scx::validate_complex(scx::complex_from_json(json::parse(text))); });
    m.def("froyshov", [](const std::string& text) { return scx::froyshov(valid_complex(text)); });
    m.def("tensor", [](const std::string& a, const std::string& b) {
        return scx::complex_to_json(scx::tensor(valid_complex(a), valid_complex(b))).dump();
    });
    m.def("dual", [](const std::string& text) { return scx::complex_to_json(scx::dual(valid_complex(text))).dump(); });
    m.def(
        "selftest",
        [](const std::string& suite, std::uint64_t seed, int cases) {
            std::vector<scx::SuiteResult> rs;
            {
                py::gil_scoped_release release;
                rs = scx::run_suites(suite, {seed, cases, 0});
            }
            return scx::summary_json(rs).dump();
        },
        py::arg("suite") = "all", py::arg("seed") = 7, py::arg("cases") = 0);
}
