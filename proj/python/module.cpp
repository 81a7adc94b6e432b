#include "badred/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace badred;

namespace {

std::string report_json(const Report& r) { return report_to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cusp reduction and 2-descent checks";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("kronecker", [](long a, long n) { return kronecker(a, n); }, py::arg("a"), py::arg("n"));
    m.def(
        "sum_of_two_squares",
        [](long q) {
            auto [a, b] = sum_of_two_squares(q);
            return std::pair<long, long>(a.get_si(), b.get_si());
        },
        py::arg("q"));
    m.def(
        "count_points",
        [](const std::array<long, 5>& a, long p, int k) {
            return enumerate_points(reduce_curve(rational_curve(a), FieldDescriptor::get(p, k))).order();
        },
        py::arg("a"), py::arg("p"), py::arg("k") = 1);
    m.def("registry_labels", [] { return Registry::embedded().labels(); });
    m.def(
        "weaker_holds", [](const std::string& label, long p, int k) { return weaker_holds(label, p, k).holds; },
        py::arg("label"), py::arg("p"), py::arg("k") = 1);
    m.def(
        "stronger_holds", [](const std::string& label, long p) { return stronger_geometric(label, p).holds; },
        py::arg("label"), py::arg("p"));
    m.def("split_check", [](long d, long p) { return split_check(NumberField::quadratic(d), p); }, py::arg("d"),
          py::arg("p"));
    m.def("cor32_classify", [](long q) { return to_string(cor32_classify(q)); }, py::arg("q"));

    // whole reports as JSON text; the package wrapper decodes them
    m.def(
        "table1_json", [](long max_prime, int jobs) { return report_json(cmd_table1(Registry::embedded(), max_prime, jobs)); },
        py::arg("max_prime") = 13, py::arg("jobs") = 1);
    m.def(
        "selmer_json", [](long q, bool audit) { return report_json(cmd_selmer(q, audit)); }, py::arg("q"),
        py::arg("audit_places") = false);
    m.def(
        "x113_json", [](long max_prime) { return report_json(cmd_x113(Registry::embedded(), max_prime)); },
        py::arg("max_prime") = 11);
    m.def("intro_demo_json", [] { return report_json(cmd_intro_demo(Registry::embedded())); });
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int status = run_cli(args, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"));
}
