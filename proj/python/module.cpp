#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qzeno/run.hpp"

namespace py = pybind11;
using namespace qzeno;

PYBIND11_MODULE(_qzeno, m) {
    m.doc() =
        "Exact decay rate of a free Gaussian wave packet coupled to an Ohmic bath at T = 0, "
        "with repeated-measurement rates and the Zeno/anti-Zeno crossover";
    m.attr("__version__") = cli::kVersion;
    m.attr("EULER_GAMMA") = kEulerGamma;

    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
        .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
        .def_readwrite("max_subdivisions", &QuadratureConfig::max_subdivisions)
        .def_readwrite("split_point", &QuadratureConfig::split_point)
        .def_readwrite("tail_terms", &QuadratureConfig::tail_terms);

    py::class_<IntegralResult>(m, "IntegralResult")
        .def_readonly("value", &IntegralResult::value)
        .def_readonly("error_estimate", &IntegralResult::error_estimate)
        .def_readonly("subdivisions_used", &IntegralResult::subdivisions_used)
        .def_readonly("converged", &IntegralResult::converged);

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init([](double mass, double hbar, double gamma, double sigma_sq,
                         double temperature) {
                 PhysicalParams p{mass, hbar, gamma, sigma_sq, temperature};
                 p.validate();
                 return p;
             }),
             py::arg("mass") = 1.0, py::arg("hbar") = 1.0, py::arg("gamma") = 1.0,
             py::arg("sigma_sq") = 1.0, py::arg("temperature") = 0.0)
        .def_readwrite("mass", &PhysicalParams::mass)
        .def_readwrite("hbar", &PhysicalParams::hbar)
        .def_readwrite("gamma", &PhysicalParams::gamma)
        .def_readwrite("sigma_sq", &PhysicalParams::sigma_sq)
        .def_readwrite("temperature", &PhysicalParams::temperature);

    py::class_<WidthBreakdown>(m, "WidthBreakdown")
        .def_readonly("sigma_sq", &WidthBreakdown::sigma_sq)
        .def_readonly("sigma_q_sq", &WidthBreakdown::sigma_q_sq)
        .def_readonly("msd", &WidthBreakdown::msd)
        .def_readonly("total", &WidthBreakdown::total);

    py::class_<AsymptoticValue>(m, "AsymptoticValue")
        .def_readonly("value", &AsymptoticValue::value)
        .def_readonly("in_range", &AsymptoticValue::in_range);

    py::class_<MeasurementSchedule>(m, "MeasurementSchedule")
        .def(py::init([](double total_time, int n_measurements) {
                 MeasurementSchedule s{total_time, n_measurements};
                 s.validate();
                 return s;
             }),
             py::arg("total_time"), py::arg("n_measurements"))
        .def_readwrite("total_time", &MeasurementSchedule::total_time)
        .def_readwrite("n_measurements", &MeasurementSchedule::n_measurements)
        .def_property_readonly("interval", &MeasurementSchedule::interval);

    py::enum_<Regime>(m, "Regime")
        .value("ZENO", Regime::zeno)
        .value("ANTI_ZENO", Regime::anti_zeno)
        .value("NEUTRAL", Regime::neutral);

    py::class_<RatePoint>(m, "RatePoint")
        .def_readonly("t", &RatePoint::t)
        .def_readonly("r_single", &RatePoint::r_single)
        .def_readonly("r_repeated", &RatePoint::r_repeated)
        .def_readonly("regime", &RatePoint::regime);

    py::class_<CrossoverResult>(m, "CrossoverResult")
        .def_readonly("t_star", &CrossoverResult::t_star)
        .def_readonly("gamma_t_star", &CrossoverResult::gamma_t_star)
        .def_readonly("bracket", &CrossoverResult::bracket)
        .def_readonly("residual", &CrossoverResult::residual)
        .def_readonly("iterations", &CrossoverResult::iterations)
        .def_readonly("multiple_roots", &CrossoverResult::multiple_roots);

    py::register_exception<NoCrossoverError>(m, "NoCrossoverError");

    const QuadratureConfig default_cfg{};
    m.def("integrate_adaptive", &integrate_adaptive, py::arg("f"), py::arg("a"), py::arg("b"),
          py::arg("cfg") = default_cfg);
    m.def("integrate_oscillatory_tail", &integrate_oscillatory_tail, py::arg("envelope"),
          py::arg("y0"), py::arg("cfg") = default_cfg);

    m.def("ohmic_response_im", &ohmic_response_im, py::arg("omega"), py::arg("params"));
    m.def("green_function", &green_function, py::arg("t"), py::arg("params"));
    m.def("commutator_quadrature", &commutator_quadrature, py::arg("t"), py::arg("params"),
          py::arg("cfg") = default_cfg);

    m.def("zeno_integral", &zeno_integral, py::arg("x"), py::arg("cfg") = default_cfg);
    m.def("msd_exact", &msd_exact, py::arg("t"), py::arg("params"), py::arg("cfg") = default_cfg);
    m.def("msd_general", &msd_general, py::arg("t"), py::arg("params"),
          py::arg("cfg") = default_cfg);
    m.def("msd_small_gt", &msd_small_gt, py::arg("t"), py::arg("params"));
    m.def("msd_large_gt", &msd_large_gt, py::arg("t"), py::arg("params"));
    m.def("sigma_q_sq", &sigma_q_sq, py::arg("t"), py::arg("params"));
    m.def("width_sq", &width_sq, py::arg("t"), py::arg("params"), py::arg("cfg") = default_cfg);
    m.def("mean_sq_velocity", &mean_sq_velocity, py::arg("t"), py::arg("params"));
    m.def("probability_density", &probability_density, py::arg("x"), py::arg("t"),
          py::arg("params"), py::arg("cfg") = default_cfg);

    m.def("survival_ratio", &survival_ratio, py::arg("t"), py::arg("params"),
          py::arg("cfg") = default_cfg);
    m.def("repeated_rate", &repeated_rate, py::arg("schedule"), py::arg("params"),
          py::arg("cfg") = default_cfg);
    m.def("repeated_rate_small_gt", &repeated_rate_small_gt, py::arg("schedule"),
          py::arg("params"));
    m.def("repeated_rate_large_gt", &repeated_rate_large_gt, py::arg("schedule"),
          py::arg("params"));
    m.def("transition_time", &transition_time, py::arg("n"), py::arg("params"),
          py::arg("cfg") = default_cfg,
          py::arg("search_window") = std::pair<double, double>{1e-2, 1e4});
    m.def("sweep", &sweep, py::arg("t_grid"), py::arg("n"), py::arg("params"),
          py::arg("cfg") = default_cfg);

    m.attr("__all__") = py::make_tuple(
        "QuadratureConfig", "IntegralResult", "PhysicalParams", "WidthBreakdown",
        "AsymptoticValue", "MeasurementSchedule", "Regime", "RatePoint", "CrossoverResult",
        "NoCrossoverError", "integrate_adaptive", "integrate_oscillatory_tail",
        "ohmic_response_im", "green_function", "commutator_quadrature", "zeno_integral",
        "msd_exact", "msd_general", "msd_small_gt", "msd_large_gt", "sigma_q_sq", "width_sq",
        "mean_sq_velocity", "probability_density", "survival_ratio", "repeated_rate",
        "repeated_rate_small_gt", "repeated_rate_large_gt", "transition_time", "sweep",
        "EULER_GAMMA");
}
