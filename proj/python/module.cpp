#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mp/analysis.hpp"
#include "mp/catalog.hpp"
#include "mp/coloring.hpp"
#include "mp/formulas.hpp"
#include "mp/mpole_io.hpp"
#include "mp/multipole.hpp"
#include "mp/verify.hpp"

namespace py = pybind11;

namespace {

// Big results cross the boundary as Python ints via their decimal form.
py::object to_py_int(const mp::BigInt& v) {
    return py::cast<py::object>(py::int_(py::str(v.str())));
}

}  // namespace

PYBIND11_MODULE(_multipole, mod) {
    mod.doc() = "cubic multipole state analysis";

    py::register_exception<mp::MultipoleError>(mod, "MultipoleError");

    py::class_<mp::Multipole>(mod, "Multipole")
        .def_property_readonly("n", &mp::Multipole::n)
        .def_property_readonly("m", &mp::Multipole::m)
        .def("__repr__", [](const mp::Multipole& m) {
            std::ostringstream oss;
            oss << "Multipole(n=" << m.n() << ", m=" << m.m() << ")";
            return oss.str();
        })
        .def("__eq__", [](const mp::Multipole& a, const mp::Multipole& b) { return a == b; });

    mod.def("parse", &mp::parse_mpole_text, py::arg("text"));
    mod.def("serialize", &mp::write_mpole_text, py::arg("multipole"));

    mod.def("make_free_edge", &mp::make_free_edge);
    mod.def("make_minimal", &mp::make_minimal, py::arg("m"));
    mod.def("make_path_tree", &mp::make_path_tree, py::arg("m"));
    mod.def("make_cycle", &mp::make_cycle, py::arg("m"));
    mod.def("make_tree", &mp::make_tree, py::arg("parent_list"));

    mod.def(
        "junction",
        [](const mp::Multipole& a, const mp::Multipole& b,
           const std::vector<std::pair<int, int>>& pairs) {
            return mp::junction(a, b, mp::JunctionSpec{pairs});
        },
        py::arg("a"), py::arg("b"), py::arg("pairs"));
    mod.def(
        "cut_edge",
        [](const mp::Multipole& m, int u, int v) { return mp::cut_edge(m, {u, v}); },
        py::arg("multipole"), py::arg("u"), py::arg("v"));
    mod.def("is_connected", &mp::is_connected);
    mod.def("is_forest", &mp::is_forest);
    mod.def("validate", &mp::validate);
    mod.def(
        "certificate",
        [](const mp::Multipole& m, bool respect_order) {
            return mp::canonical_certificate(m, respect_order
                                                     ? mp::CertMode::RespectSemiedgeOrder
                                                     : mp::CertMode::IgnoreSemiedgeLabels);
        },
        py::arg("multipole"), py::arg("respect_order") = false);

    mod.def(
        "states",
        [](const mp::Multipole& m) { return mp::states(m).to_strings(); },
        py::arg("multipole"));
    mod.def("is_colorable", &mp::is_colorable);
    mod.def(
        "admissible_states",
        [](int m) { return mp::admissible_states(m).to_strings(); },
        py::arg("m"));

    mod.def("sigma", [](int m) { return to_py_int(mp::sigma(m)); }, py::arg("m"));
    mod.def("rho", [](int m) { return to_py_int(mp::rho(m)); }, py::arg("m"));
    mod.def("tree_count", [](int m) { return to_py_int(mp::tree_count(m)); }, py::arg("m"));
    mod.def("cycle_count", [](int m) { return to_py_int(mp::cycle_count(m)); }, py::arg("m"));
    mod.def(
        "forest_count",
        [](int n, int m) { return to_py_int(mp::forest_count(n, m)); },
        py::arg("n"), py::arg("m"));

    mod.def(
        "catalog",
        [](int m, int n, bool connected_only, bool colorable_only, int workers) {
            std::vector<mp::Multipole> out;
            for (auto& e : mp::generate({m, n, connected_only, colorable_only, {}}, workers))
                out.push_back(e.multipole);
            return out;
        },
        py::arg("m"), py::arg("n"), py::arg("connected_only") = false,
        py::arg("colorable_only") = false, py::arg("workers") = 1);

    auto verdict_dict = [](const mp::AnalysisVerdict& v, int m_len) {
        py::dict d;
        d["verdict"] = mp::to_string(v.kind);
        d["holds"] = v.holds();
        if (v.witness) d["witness"] = mp::write_mpole_text(*v.witness);
        if (!v.witness_order.empty()) d["witness_order"] = v.witness_order;
        if (v.state) d["state"] = mp::state_to_string(*v.state, m_len);
        if (v.bound_n_max >= 0) d["bound"] = v.bound_n_max;
        if (!v.note.empty()) d["note"] = v.note;
        return d;
    };
    mod.def(
        "check_complete",
        [=](const mp::Multipole& m) { return verdict_dict(mp::is_color_complete(m), m.m()); },
        py::arg("multipole"));
    mod.def(
        "check_closed",
        [=](const mp::Multipole& m, int bound, int workers) {
            return verdict_dict(mp::is_color_closed(m, bound, workers), m.m());
        },
        py::arg("multipole"), py::arg("bound") = 8, py::arg("workers") = 1);
    mod.def(
        "check_reducible",
        [=](const mp::Multipole& m, int workers) {
            return verdict_dict(mp::is_reducible(m, workers), m.m());
        },
        py::arg("multipole"), py::arg("workers") = 1);
    mod.def(
        "check_separable",
        [=](const mp::Multipole& m, int workers) {
            return verdict_dict(mp::is_separable(m, workers), m.m());
        },
        py::arg("multipole"), py::arg("workers") = 1);

    mod.def(
        "run_acceptance",
        [](int workers) {
            py::list out;
            for (const auto& r : mp::run_acceptance(workers)) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("workers") = 1);
}
