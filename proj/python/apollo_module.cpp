// Python bindings. Coordinates go in as exact strings ("3/4", "0.125");
// results come back as the enum names used by the CLI.

#include "apollo/apollo.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace apollo;

namespace {

PyObject* apollo_error = nullptr;

std::string quad_text(const QuadExt& q) {
    if (q.is_rational()) return format_scalar(q.p());
    return format_scalar(q.p()) + "+" + format_scalar(q.q()) + "*sqrt(" + format_scalar(q.delta()) + ")";
}

VertexLabelKind label_of(const std::string& s) {
    if (s == "Vijka" || s == "phi") return VertexLabelKind::Vijka;
    if (s == "Vikja" || s == "chi") return VertexLabelKind::Vikja;
    throw py::value_error("label must be 'Vijka' (phi) or 'Vikja' (chi)");
}

py::tuple pair(SignPair d) { return py::make_tuple(to_string(d.first), to_string(d.second)); }

}  // namespace

PYBIND11_MODULE(_apollo, m) {
    m.doc() = "Exact predicates for the Apollonius diagram of spheres";

    apollo_error = PyErr_NewException("apollonius.ApolloError", PyExc_RuntimeError, nullptr);
    m.attr("ApolloError") = py::handle(apollo_error);
    // args = (kind, message)
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::tuple args = py::make_tuple(to_string(e.kind()), e.what());
            PyErr_SetObject(apollo_error, args.ptr());
        }
    });

    py::class_<Site>(m, "Site")
        .def(py::init([](std::string id, const std::string& x, const std::string& y, const std::string& z,
                         const std::string& r) { return make_site(std::move(id), x, y, z, r); }),
             py::arg("id"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("r"))
        .def_readonly("id", &Site::id)
        .def_property_readonly("center", [](const Site& s) {
            return py::make_tuple(format_scalar(s.c.x), format_scalar(s.c.y), format_scalar(s.c.z));
        })
        .def_property_readonly("radius", [](const Site& s) { return format_scalar(s.r); })
        .def("__repr__", [](const Site& s) {
            return "Site('" + s.id + "', '" + format_scalar(s.c.x) + "', '" + format_scalar(s.c.y) + "', '" +
                   format_scalar(s.c.z) + "', '" + format_scalar(s.r) + "')";
        });

    using S = const Site&;
    m.def("incone", [](S a, S b, S c) { return to_string(incone(a, b, c)); });
    m.def("incone_perturbed", [](S a, S b, S c) { return to_string(incone_perturbed(a, b, c)); });
    m.def("tritype", [](S i, S j, S k) { return to_string(tritype(i, j, k)); });
    m.def("distance", [](S i, S j, S k, S a) { return pair(distance(i, j, k, a)); });
    m.def("distance_perturbed", [](S i, S j, S k, S a) { return pair(distance_perturbed(i, j, k, a)); });
    m.def("existence", [](S i, S j, S k, S a) { return to_string(existence(i, j, k, a)); });
    m.def("existence_perturbed", [](S i, S j, S k, S a) { return to_string(existence_perturbed(i, j, k, a)); });
    m.def("shadow_region", [](S i, S j, S k, S a) { return to_string(shadow_region(i, j, k, a).kind); });
    m.def("shadow_region_perturbed",
          [](S i, S j, S k, S a) { return to_string(shadow_region_perturbed(i, j, k, a).kind); });
    m.def("degeneracy_type", [](S i, S j, S k, S a) { return to_string(degeneracy_type(i, j, k, a)); });
    m.def("vertex_coordinates", [](S i, S j, S k, S a, const std::string& label) {
        auto v = vertex_coordinates(i, j, k, a, label_of(label));
        return py::make_tuple(quad_text(v.coordinate(0)), quad_text(v.coordinate(1)), quad_text(v.coordinate(2)));
    });
    m.def("insphere", [](S i, S j, S k, S a, S b) { return to_string(insphere(i, j, k, a, b)); });
    m.def("order", [](S i, S j, S k, S a, S b) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : order(i, j, k, a, b)) out.emplace_back(v.label == VertexLabelKind::Vijka ? "phi" : "chi", v.site);
        return out;
    });
    m.def("validate_edge", [](S i, S j, S k, S l, S n) { return validate_edge(i, j, k, l, n); });
    m.def("edge_conflict", [](S i, S j, S k, S l, S n, S q) { return to_string(edge_conflict(i, j, k, l, n, q)); });
    m.def("infinite_right_edge_conflict",
          [](S i, S j, S k, S l, S q) { return to_string(infinite_right_edge_conflict(i, j, k, l, q)); });
    m.def("infinite_left_edge_conflict",
          [](S i, S j, S k, S n, S q) { return to_string(infinite_left_edge_conflict(i, j, k, n, q)); });
}
