#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cactoidlab/curves.hpp"
#include "cactoidlab/io.hpp"
#include "cactoidlab/mesh_builders.hpp"

namespace py = pybind11;
using namespace cactoidlab;

namespace {

// Exact values cross the boundary as fractions.Fraction built from the
// canonical string form.
py::object to_fraction(const Rational& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(scalar_to_string(r));
}

Rational from_py_scalar(const py::object& v) {
    return parse_scalar(py::str(v).cast<std::string>());
}

py::dict invariants_dict(const SurfaceInvariants& inv) {
    py::dict d;
    d["orientable"] = inv.orientable;
    d["euler_char"] = inv.euler_char;
    d["boundary_count"] = inv.boundary_count;
    d["connectivity"] = inv.connectivity;
    d["reduced_connectivity"] = inv.reduced_connectivity;
    return d;
}

SurfaceInvariants class_from(int connectivity, int boundary, bool orientable) {
    SurfaceInvariants s;
    s.connectivity = connectivity;
    s.boundary_count = boundary;
    s.euler_char = 2 - connectivity;
    s.reduced_connectivity = connectivity - boundary;
    s.orientable = orientable;
    return s;
}

py::dict outcome_dict(const CutOutcome& o) {
    auto orientation = [](OrientationConstraint c) {
        switch (c) {
            case OrientationConstraint::orientable: return "orientable";
            case OrientationConstraint::non_orientable: return "non_orientable";
            case OrientationConstraint::unconstrained: return "unconstrained";
        }
        return "";
    };
    py::dict d;
    switch (o.kind) {
        case CutKind::wedge_split: d["kind"] = "wedge_split"; break;
        case CutKind::two_point_identified: d["kind"] = "two_point_identified"; break;
        case CutKind::plain_surface: d["kind"] = "plain_surface"; break;
    }
    py::list parts;
    for (const auto& p : o.parts) {
        py::dict pd;
        pd["connectivity"] = p.connectivity;
        pd["orientation"] = orientation(p.orientation);
        parts.append(pd);
    }
    d["parts"] = parts;
    d["boundary_identification"] = o.boundary_identification;
    d["note"] = o.orientability_note;
    return d;
}

PipelineConfig::Orientability orientability_from(const std::string& name) {
    if (name == "orientable") return PipelineConfig::Orientability::orientable;
    if (name == "non-orientable" || name == "non_orientable") {
        return PipelineConfig::Orientability::non_orientable;
    }
    if (name == "free") return PipelineConfig::Orientability::free_choice;
    throw ParseError("orientability must be orientable, non-orientable or free");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "surfaces, cactoids and certified Gromov-Hausdorff approximations";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<FiniteMetricSpace>(m, "MetricSpace")
        .def_static(
            "create",
            [](const std::vector<std::string>& labels, const py::sequence& rows) {
                std::vector<std::vector<Rational>> dist;
                for (const auto& row : rows) {
                    std::vector<Rational> r;
                    for (const auto& v : row.cast<py::sequence>()) {
                        r.push_back(from_py_scalar(v.cast<py::object>()));
                    }
                    dist.push_back(std::move(r));
                }
                return FiniteMetricSpace::create(labels, std::move(dist));
            },
            py::arg("labels"), py::arg("dist"),
            "Validated metric space; distances as strings, ints or Fractions.")
        .def_static("from_json", [](const std::string& t) { return metric_from_json(t); })
        .def("to_json", [](const FiniteMetricSpace& x) { return metric_to_json(x); })
        .def("__len__", &FiniteMetricSpace::size)
        .def_property_readonly("labels",
                               [](const FiniteMetricSpace& x) { return x.labels(); })
        .def("dist",
             [](const FiniteMetricSpace& x, int i, int j) { return to_fraction(x.dist(i, j)); })
        .def("diameter", [](const FiniteMetricSpace& x) { return to_fraction(x.diameter()); });

    m.def(
        "gh_exact",
        [](const FiniteMetricSpace& x, const FiniteMetricSpace& y, int cap) {
            return to_fraction(gh_exact(x, y, cap));
        },
        py::arg("x"), py::arg("y"), py::arg("cap") = 8);
    m.def("gh_lower", [](const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
        return to_fraction(gh_lower(x, y));
    });

    py::class_<TriSurface>(m, "Surface")
        .def_static("from_text", [](const std::string& t) { return surface_from_text(t); })
        .def("to_text", [](const TriSurface& s) { return surface_to_text(s); })
        .def_property_readonly("vertices", [](const TriSurface& s) { return s.vertices; })
        .def("invariants", [](const TriSurface& s) { return invariants_dict(invariants(s)); })
        .def("doubled", [](const TriSurface& s) { return double_surface(s).surface; })
        .def("diameter", [](const TriSurface& s) { return to_fraction(mesh_diameter(s)); });

    m.def("sphere", [](const py::object& d) { return sphere_mesh(from_py_scalar(d)); },
          py::arg("diameter") = py::str("1"));
    m.def("disc", [](const py::object& d) { return disc_mesh(from_py_scalar(d)); },
          py::arg("diameter") = py::str("1"));
    m.def("annulus", [](const py::object& d) { return annulus_mesh(from_py_scalar(d)); },
          py::arg("edge") = py::str("1"));
    m.def("mobius", [](const py::object& d) { return mobius_mesh(from_py_scalar(d)); },
          py::arg("edge") = py::str("1"));
    m.def("torus", [](const py::object& d) { return torus_mesh(from_py_scalar(d)); },
          py::arg("edge") = py::str("1"));

    m.def(
        "cut_jordan",
        [](int c, int b, bool orientable) {
            py::list out;
            for (const auto& o : cut_jordan(class_from(c, b, orientable))) {
                out.append(outcome_dict(o));
            }
            return out;
        },
        py::arg("c"), py::arg("b") = 0, py::arg("orientable") = true);
    m.def(
        "cut_separating_arc",
        [](int c, int b, bool orientable) {
            py::list out;
            for (const auto& o : cut_separating_arc(class_from(c, b, orientable))) {
                out.append(outcome_dict(o));
            }
            return out;
        },
        py::arg("c"), py::arg("b") = 1, py::arg("orientable") = true);
    m.def(
        "cut_nonseparating_arc",
        [](int c, int b, bool orientable) {
            return outcome_dict(cut_nonseparating_arc(class_from(c, b, orientable)));
        },
        py::arg("c"), py::arg("b") = 1, py::arg("orientable") = true);

    m.def("validate_cactoid", [](const std::string& text) {
        auto [g, h] = cactoid_from_json(text);
        (void)h;
        return validate(g).violations;
    });
    m.def("connectivity_number", [](const std::string& text) {
        auto [g, h] = cactoid_from_json(text);
        (void)h;
        return connectivity_number(g);
    });
    m.def("minimal_preboundary", [](const std::string& text) {
        auto [g, h] = cactoid_from_json(text);
        g.grouping = minimal_preboundary(g);
        return cactoid_to_json(g, h);
    });
    m.def(
        "certify",
        [](const std::string& text, int c) {
            auto [g, h] = cactoid_from_json(text);
            auto cert = certify(c, g, h);
            py::dict d;
            d["c_target"] = cert.c_target;
            d["c0"] = cert.c0;
            d["k"] = cert.k;
            d["k0"] = cert.k0;
            d["verdict"] = cert.verdict;
            return d;
        },
        py::arg("cactoid_json"), py::arg("c"));
    m.def(
        "approximate",
        [](const std::string& text, int target_c, const std::vector<int>& schedule,
           const std::string& orientability, int refine, int sample) {
            auto [g, h] = cactoid_from_json(text);
            PipelineConfig cfg;
            cfg.refine = refine;
            cfg.sample_size = sample;
            cfg.target = orientability_from(orientability);
            auto cert = run_pipeline(g, h, schedule, target_c, cfg);
            return certificate_to_json(cert);
        },
        py::arg("cactoid_json"), py::arg("target_c"),
        py::arg("schedule") = std::vector<int>{2, 4, 8, 16},
        py::arg("orientability") = "free", py::arg("refine") = 0, py::arg("sample") = 0,
        "Runs the approximation schedule; returns the certificate as JSON.");
}
