#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lemni/area.hpp"
#include "lemni/constructions.hpp"
#include "lemni/io.hpp"
#include "lemni/metrics.hpp"
#include "lemni/potential.hpp"
#include "lemni/search.hpp"

namespace py = pybind11;
using namespace lemni;

namespace {

SamplerConfig make_sampler(long long p, int trials, std::uint64_t seed, const std::string& kind) {
    SamplerConfig cfg;
    cfg.kind = sampler_kind_from_string(kind);
    cfg.target_points = p;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_lemnikit, m) {
    m.doc() = "numerical laboratory for polynomial lemniscates";

    py::class_<Root>(m, "Root")
        .def(py::init([](Complex loc, long long mult) { return Root{loc, mult}; }),
             py::arg("location"), py::arg("multiplicity") = 1)
        .def_readonly("location", &Root::location)
        .def_readonly("multiplicity", &Root::multiplicity)
        .def("__repr__", [](const Root& r) {
            return "Root(" + std::to_string(r.location.real()) + (r.location.imag() < 0 ? "-" : "+") +
                   std::to_string(std::abs(r.location.imag())) + "j, mult=" +
                   std::to_string(r.multiplicity) + ")";
        });

    py::class_<RootConfiguration>(m, "RootConfiguration")
        .def(py::init([](const std::vector<std::pair<Complex, long long>>& roots,
                         const std::string& tag) {
                 std::vector<Root> rs;
                 for (const auto& [loc, mult] : roots) rs.push_back({loc, mult});
                 return RootConfiguration(std::move(rs), tag_from_string(tag));
             }),
             py::arg("roots"), py::arg("tag") = "NONE")
        .def_static("from_angles", &RootConfiguration::from_angles, py::arg("angles_over_2pi"),
                    py::arg("mults"))
        .def_static("roots_of_unity", &RootConfiguration::roots_of_unity, py::arg("n"))
        .def_static("monomial", &RootConfiguration::monomial, py::arg("n"))
        .def_property_readonly("degree", &RootConfiguration::degree)
        .def_property_readonly("roots", &RootConfiguration::roots)
        .def_property_readonly("tag", [](const RootConfiguration& c) { return to_string(c.tag()); })
        .def("sorted_angles", &RootConfiguration::sorted_angles)
        .def("to_json", [](const RootConfiguration& c) { return io::config_to_json(c); });

    m.def("parse_config", &io::parse_config, py::arg("text"));
    m.def("log_abs_eval", &log_abs_eval, py::arg("config"), py::arg("z"));
    m.def(
        "membership",
        [](const RootConfiguration& c, double t, Complex z) {
            return membership(LevelSetSpec(c, t), z);
        },
        py::arg("config"), py::arg("t"), py::arg("z"));

    py::class_<AreaEstimate>(m, "AreaEstimate")
        .def_readonly("mean", &AreaEstimate::mean)
        .def_readonly("stddev", &AreaEstimate::stddev)
        .def_readonly("trials", &AreaEstimate::trials)
        .def_readonly("points_per_trial", &AreaEstimate::points_per_trial)
        .def_readonly("bounding_radius", &AreaEstimate::bounding_radius)
        .def_readonly("seed", &AreaEstimate::seed)
        .def("__repr__", [](const AreaEstimate& e) {
            return "AreaEstimate(mean=" + std::to_string(e.mean) +
                   ", stddev=" + std::to_string(e.stddev) + ")";
        });

    m.def(
        "estimate_area",
        [](const RootConfiguration& c, double t, long long p, int trials, std::uint64_t seed,
           const std::string& sampler) {
            return estimate_area(LevelSetSpec(c, t), make_sampler(p, trials, seed, sampler));
        },
        py::arg("config"), py::arg("t") = 1.0, py::arg("p") = 100000, py::arg("trials") = 6,
        py::arg("seed") = 1, py::arg("sampler") = "triangular");
    m.def("erdos_area_closed_form", &erdos_area_closed_form, py::arg("n"));

    m.def(
        "inradius",
        [](const RootConfiguration& c, double t, int resolution) {
            return inradius_estimate(LevelSetSpec(c, t), resolution);
        },
        py::arg("config"), py::arg("t") = 1.0, py::arg("resolution") = 1024);
    m.def(
        "perimeter",
        [](const RootConfiguration& c, double t, int resolution) {
            return perimeter_estimate(LevelSetSpec(c, t), resolution);
        },
        py::arg("config"), py::arg("t") = 1.0, py::arg("resolution") = 1024);
    m.def(
        "component_count",
        [](const RootConfiguration& c, double t, int resolution) {
            return component_count(LevelSetSpec(c, t), resolution);
        },
        py::arg("config"), py::arg("t") = 1.0, py::arg("resolution") = 1024);
    m.def(
        "contour_svg",
        [](const RootConfiguration& c, double t, int resolution) {
            return contour_svg(LevelSetSpec(c, t), resolution);
        },
        py::arg("config"), py::arg("t") = 1.0, py::arg("resolution") = 512);
    m.def(
        "circle_arcs",
        [](const RootConfiguration& c, double t, int samples) {
            return circle_arc_intersections(LevelSetSpec(c, t), samples).arcs;
        },
        py::arg("config"), py::arg("t") = 1.0, py::arg("samples") = 4096);
    m.def("sign_changes", &sign_changes, py::arg("config"), py::arg("t"), py::arg("center"),
          py::arg("radius"), py::arg("angular_samples") = 4096);
    m.def("doubling_exponent", &doubling_exponent, py::arg("config"), py::arg("shrink") = 0.98,
          py::arg("grid") = 4096);
    m.def("discrepancy", &discrepancy, py::arg("config"));

    py::class_<PushResult>(m, "PushResult")
        .def_readonly("pushed", &PushResult::pushed)
        .def_readonly("L", &PushResult::L)
        .def_readonly("epsilon", &PushResult::epsilon)
        .def_readonly("comparison_margin", &PushResult::comparison_margin)
        .def_readonly("failure_bound", &PushResult::failure_bound);
    m.def("push_zeros_deterministic", &push_zeros_deterministic, py::arg("config"),
          py::arg("epsilon"), py::arg("round_up") = false, py::arg("radial_grid") = 200,
          py::arg("angular_grid") = 200);
    m.def("push_zeros_probabilistic", &push_zeros_probabilistic, py::arg("config"),
          py::arg("epsilon"), py::arg("L"), py::arg("seed"), py::arg("radial_grid") = 100,
          py::arg("angular_grid") = 100);

    py::class_<WagnerResult>(m, "WagnerResult")
        .def_readonly("config", &WagnerResult::config)
        .def_readonly("level", &WagnerResult::level)
        .def_readonly("M", &WagnerResult::M)
        .def_readonly("N", &WagnerResult::N)
        .def_readonly("A_ratio", &WagnerResult::A_ratio);
    m.def(
        "wagner_polynomial",
        [](double R, double tol, double alpha, long long cap) {
            return wagner_polynomial(WagnerParams{R, tol, alpha, cap});
        },
        py::arg("R"), py::arg("truncation_tolerance") = 1e-14, py::arg("alpha") = 1.0,
        py::arg("degree_cap") = 1000000);

    m.def(
        "c_nh", &c_nh, py::arg("n"), py::arg("h"));
    m.def(
        "named_family",
        [](const std::string& kind, int n) { return named_family(family_kind_from_string(kind), n); },
        py::arg("kind"), py::arg("n"));

    py::class_<SearchReport>(m, "SearchReport")
        .def_readonly("best", &SearchReport::best)
        .def_readonly("best_area", &SearchReport::best_area)
        .def_readonly("evaluated", &SearchReport::evaluated)
        .def_readonly("seed", &SearchReport::seed);
    m.def(
        "exhaustive_search",
        [](int n, int grid_m, double t, long long p, int trials, std::uint64_t seed,
           bool conjugate_symmetric) {
            SearchSpace space;
            space.n = n;
            space.m = grid_m;
            space.symmetry = conjugate_symmetric ? Symmetry::ConjugateSymmetric : Symmetry::None;
            return exhaustive_search(space, t, make_sampler(p, trials, seed, "triangular"));
        },
        py::arg("n"), py::arg("m"), py::arg("t") = 1.0, py::arg("p") = 20000,
        py::arg("trials") = 4, py::arg("seed") = 1, py::arg("conjugate_symmetric") = true);
    m.def(
        "local_search",
        [](const RootConfiguration& init, double t, long long p, int trials, std::uint64_t seed,
           int arc_steps) {
            return local_search(init, t, make_sampler(p, trials, seed, "triangular"), arc_steps);
        },
        py::arg("initial"), py::arg("t") = 1.0, py::arg("p") = 20000, py::arg("trials") = 4,
        py::arg("seed") = 1, py::arg("arc_steps") = 16);
}
