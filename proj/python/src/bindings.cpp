#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "confmap/acceptance.hpp"
#include "confmap/analysis.hpp"
#include "confmap/backward_map.hpp"
#include "confmap/config.hpp"
#include "confmap/error.hpp"
#include "confmap/grid.hpp"
#include "confmap/reference.hpp"
#include "confmap/runner.hpp"

namespace py = pybind11;
using namespace confmap;

namespace {

py::dict record_dict(const ConvergenceRecord& r) {
    py::dict d;
    d["N"] = r.N;
    d["err_f"] = r.err_forward;
    d["err_b"] = r.err_backward;
    d["err_rho"] = r.err_modulus;
    d["res_f"] = r.residual_f;
    d["res_b"] = r.residual_b;
    d["cond_f"] = r.cond_f;
    d["cond_b"] = r.cond_b;
    d["failure"] = r.failure;
    return d;
}

py::dict report_dict(const SolveReport& r) {
    py::dict d;
    d["residual"] = r.residual_inf;
    d["cond"] = r.cond_estimate;
    d["least_squares"] = r.least_squares;
    return d;
}

}  // namespace

PYBIND11_MODULE(_confmap, m) {
    m.doc() = "Dipole simulation conformal maps";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<GeometryError>(m, "GeometryError", base.ptr());
    py::register_exception<ArrangementError>(m, "ArrangementError", base.ptr());
    py::register_exception<SingularKernelError>(m, "SingularKernelError", base.ptr());
    py::register_exception<SolverError>(m, "SolverError", base.ptr());
    py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    py::class_<BoundaryCurve>(m, "BoundaryCurve")
        .def("param", &BoundaryCurve::param)
        .def("deriv", &BoundaryCurve::deriv)
        .def("sample", &BoundaryCurve::sample, py::arg("m"), py::arg("shift") = 0.0);
    m.def("circle", &circle, py::arg("center"), py::arg("radius"));
    m.def("cassini_oval", &cassini_oval, py::arg("a"), py::arg("scale") = 1.0);

    py::class_<Region>(m, "Region")
        .def_property_readonly("connectivity", &Region::connectivity)
        .def("component", &Region::component, py::return_value_policy::reference_internal)
        .def("contains", [](const Region& r, Cx z) { return contains(r, z); })
        .def("hole_containing", &Region::hole_containing);
    m.def("disk_region", &disk_region, py::arg("center") = Cx(0.0), py::arg("radius") = 1.0);
    m.def("annulus_region", &annulus_region, py::arg("inner_radius"));
    m.def("cassini_oval_region", &cassini_oval_region, py::arg("a"));
    m.def("cassini_frame_region", &cassini_frame_region, py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"));

    py::class_<PointConfig>(m, "PointConfig")
        .def(py::init([](int N, double rf, double rb) { return PointConfig{N, rf, rb}; }), py::arg("N") = 32,
             py::arg("rtilde_f") = 0.2, py::arg("rtilde_b") = 0.1)
        .def_readwrite("N", &PointConfig::N)
        .def_readwrite("rtilde_f", &PointConfig::rtilde_f)
        .def_readwrite("rtilde_b", &PointConfig::rtilde_b);

    py::class_<ForwardMap>(m, "ForwardMap")
        .def("__call__", py::vectorize(&ForwardMap::eval))
        .def("g", &ForwardMap::g)
        .def("h", &ForwardMap::h)
        .def_property_readonly("z0", &ForwardMap::z0)
        .def_property_readonly("moduli", &ForwardMap::moduli)
        .def_property_readonly("N", &ForwardMap::N);

    py::class_<BackwardMap>(m, "BackwardMap")
        .def("__call__", py::vectorize(&BackwardMap::eval))
        .def_property_readonly("poles", &BackwardMap::poles)
        .def_property_readonly("coeffs", &BackwardMap::coeffs)
        .def_property_readonly("inner_radius", [](const BackwardMap& b) { return b.canonical().inner_radius; });

    m.def(
        "build_forward",
        [](const Region& region, Cx z0, const PointConfig& cfg) {
            auto [map, rep] = build_forward(region, z0, cfg);
            return py::make_tuple(std::move(map), report_dict(rep));
        },
        py::arg("region"), py::arg("z0"), py::arg("config") = PointConfig{});
    m.def(
        "build_backward",
        [](const ForwardMap& fwd, const PointConfig& cfg) {
            auto [map, rep] = build_backward(boundary_correspondence(fwd), cfg, canonical_of(fwd));
            return py::make_tuple(std::move(map), report_dict(rep));
        },
        py::arg("forward"), py::arg("config") = PointConfig{});

    py::class_<ExactMapCase>(m, "ExactMapCase")
        .def_readonly("name", &ExactMapCase::name)
        .def_readonly("region", &ExactMapCase::region)
        .def_readonly("z0", &ExactMapCase::z0)
        .def_readonly("modulus", &ExactMapCase::modulus)
        .def("forward", [](const ExactMapCase& c, Cx z) { return c.forward(z); })
        .def("backward", [](const ExactMapCase& c, Cx w) { return c.backward(w); });
    m.def("mobius_case", &mobius_case, py::arg("z0"));
    m.def("cassini_case", &cassini_case, py::arg("a"));
    m.def("frame_case", &frame_case, py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"));
    m.def("annulus_case", &annulus_case, py::arg("rho"));

    m.def("hilbert_transform", [](const std::vector<Cx>& c) { return hilbert_transform(c); });
    m.def(
        "discrete_hs_norm", [](const std::vector<double>& v, double s) { return discrete_hs_norm(v, s); },
        py::arg("samples"), py::arg("s") = 1.0);

    py::class_<RunConfig>(m, "RunConfig")
        .def_readonly("N_list", &RunConfig::N_list)
        .def_readonly("z0", &RunConfig::z0)
        .def("to_json", [](const RunConfig& c) { return config_to_json(c); });
    m.def("parse_config_text", &parse_config_text);
    m.def("parse_config", [](const std::string& path) { return parse_config(path); });

    m.def("run_sweep", [](const RunConfig& cfg) {
        py::list out;
        for (const auto& r : run_sweep(cfg)) out.append(record_dict(r));
        return out;
    });
    m.def("sweep_csv", [](const RunConfig& cfg) { return sweep_csv(run_sweep(cfg)); });
    m.def(
        "run",
        [](const RunConfig& cfg, const std::string& out_dir, bool csv, bool json, bool svg) {
            const auto outcome = run(cfg, out_dir, {csv, json, svg});
            std::vector<std::string> written;
            for (const auto& p : outcome.written) written.push_back(p.string());
            return py::make_tuple(written, outcome.warnings);
        },
        py::arg("config"), py::arg("out_dir"), py::arg("csv") = true, py::arg("json") = false,
        py::arg("svg") = false);

    m.def("run_acceptance", [] {
        py::list out;
        for (const auto& r : run_acceptance()) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    });
}
