// bindings.cpp

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfn/analytic.hpp"
#include "gfn/bessel.hpp"
#include "gfn/commands.hpp"
#include "gfn/config.hpp"
#include "gfn/continuation.hpp"
#include "gfn/lattice.hpp"
#include "gfn/sde.hpp"

namespace py = pybind11;
using namespace gfn;

PYBIND11_MODULE(_gfn, m) {
  m.doc() = "stochastic free scalar field on a momentum lattice";
  m.attr("__version__") = version_string();

  // lattice
  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init<>())
      .def_readwrite("m", &PhysicalParams::m)
      .def_readwrite("hbar", &PhysicalParams::hbar)
      .def_readwrite("nu", &PhysicalParams::nu)
      .def_readwrite("L", &PhysicalParams::L)
      .def_readwrite("lambda_cut", &PhysicalParams::lambda_cut)
      .def("validate", &PhysicalParams::validate,
           py::arg("require_real_nu") = true)
      .def("__repr__", [](const PhysicalParams& p) {
        return "PhysicalParams(m=" + std::to_string(p.m) +
               ", hbar=" + std::to_string(p.hbar) +
               ", nu=" + std::to_string(p.nu) + ", L=" + std::to_string(p.L) +
               ", lambda_cut=" + std::to_string(p.lambda_cut) + ")";
      });

  py::class_<ModeIndex>(m, "ModeIndex")
      .def(py::init([](int a, int b, int c) {
             return ModeIndex{{a, b, c}};
           }),
           py::arg("n1"), py::arg("n2"), py::arg("n3"))
      .def_property_readonly(
          "n", [](const ModeIndex& n) { return n.n; })
      .def("is_zero", &ModeIndex::is_zero)
      .def("negated", &ModeIndex::negated)
      .def("k_squared", &ModeIndex::k_squared, py::arg("L"))
      .def("__eq__", [](const ModeIndex& a, const ModeIndex& b) { return a == b; })
      .def("__repr__", [](const ModeIndex& n) {
        return "ModeIndex(" + std::to_string(n.n[0]) + ", " +
               std::to_string(n.n[1]) + ", " + std::to_string(n.n[2]) + ")";
      });

  py::class_<ModeSet>(m, "ModeSet")
      .def_readonly("params", &ModeSet::params)
      .def_readonly("reps", &ModeSet::reps)
      .def_readonly("has_zero", &ModeSet::has_zero)
      .def("canonical_count", &ModeSet::canonical_count)
      .def("lattice_count", &ModeSet::lattice_count);

  m.def("build_mode_set", &build_mode_set, py::arg("params"),
        py::arg("max_modes") = kDefaultMaxModes);
  m.def("mode_energy", &mode_energy, py::arg("n"), py::arg("params"));
  m.def("mode_omega", &mode_omega, py::arg("n"), py::arg("params"));
  m.def("mode_rate", &mode_rate, py::arg("n"), py::arg("params"));

  // analytic
  py::class_<SpacetimePoint>(m, "SpacetimePoint")
      .def(py::init([](double x, double y, double z, double t) {
             return SpacetimePoint{{x, y, z}, t};
           }),
           py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0,
           py::arg("t") = 0.0)
      .def_readwrite("x", &SpacetimePoint::x)
      .def_readwrite("t", &SpacetimePoint::t)
      .def("__repr__", [](const SpacetimePoint& p) {
        return "SpacetimePoint(" + std::to_string(p.x[0]) + ", " +
               std::to_string(p.x[1]) + ", " + std::to_string(p.x[2]) + ", " +
               std::to_string(p.t) + ")";
      });

  m.def("spatial_distance", &spatial_distance);
  m.def("euclidean_interval", &euclidean_interval);
  m.def("mode_correlation", &mode_correlation, py::arg("n"), py::arg("dt"),
        py::arg("params"));
  m.def("field_mode_correlation", &field_mode_correlation, py::arg("n"),
        py::arg("nprime"), py::arg("dt"), py::arg("params"));
  m.def("schwinger2_modesum", &schwinger2_modesum, py::arg("p1"),
        py::arg("p2"), py::arg("modes"));
  m.def("schwinger2_continuum_r", &schwinger2_continuum_r, py::arg("r"),
        py::arg("params"));
  m.def("schwinger2_continuum", &schwinger2_continuum, py::arg("dp"),
        py::arg("params"));
  m.def("schwinger2_quadrature", &schwinger2_quadrature, py::arg("dp"),
        py::arg("params"));
  m.def("wick_pairings", &wick_pairings, py::arg("n"),
        py::arg("max_n") = kDefaultMaxWickOrder);
  m.def("schwingerN", &schwingerN, py::arg("points"), py::arg("params"),
        py::arg("max_n") = kDefaultMaxWickOrder);
  m.def("scaled_time_expectation", &scaled_time_expectation, py::arg("points"),
        py::arg("params"), py::arg("max_n") = kDefaultMaxWickOrder);
  m.def("npoint_modesum", &npoint_modesum, py::arg("points"), py::arg("modes"),
        py::arg("max_n") = kDefaultMaxWickOrder);
  m.def("bessel_k1", &bessel_k1, py::arg("x"));

  // simulation
  py::enum_<Scheme>(m, "Scheme")
      .value("EXACT", Scheme::kExact)
      .value("EULER_MARUYAMA", Scheme::kEulerMaruyama);

  py::class_<RngPolicy>(m, "RngPolicy")
      .def(py::init([](std::uint64_t seed) { return RngPolicy{seed}; }),
           py::arg("master_seed") = 1)
      .def_readwrite("master_seed", &RngPolicy::master_seed);

  py::class_<EnsembleConfig>(m, "EnsembleConfig")
      .def(py::init<>())
      .def_readwrite("n_trajectories", &EnsembleConfig::n_trajectories)
      .def_readwrite("grid_dt", &EnsembleConfig::grid_dt)
      .def_readwrite("grid_len", &EnsembleConfig::grid_len)
      .def_readwrite("scheme", &EnsembleConfig::scheme)
      .def_readwrite("jobs", &EnsembleConfig::jobs);

  py::class_<CorrelatorEstimate>(m, "CorrelatorEstimate")
      .def_readonly("mean", &CorrelatorEstimate::mean)
      .def_readonly("std_err", &CorrelatorEstimate::std_err)
      .def_readonly("n_samples", &CorrelatorEstimate::n_samples);

  py::class_<AutocorrEstimate>(m, "AutocorrEstimate")
      .def_readonly("lag_requested", &AutocorrEstimate::lag_requested)
      .def_readonly("lag_snapped", &AutocorrEstimate::lag_snapped)
      .def_readonly("snap_error", &AutocorrEstimate::snap_error)
      .def_readonly("r", &AutocorrEstimate::r)
      .def_readonly("i", &AutocorrEstimate::i);

  m.def("component_variance", &component_variance, py::arg("n"),
        py::arg("params"));
  m.def("estimate_mode_autocorr", &estimate_mode_autocorr, py::arg("modes"),
        py::arg("n"), py::arg("lags"), py::arg("ensemble"), py::arg("policy"),
        py::call_guard<py::gil_scoped_release>());
  m.def("estimate_field_npoint", &estimate_field_npoint, py::arg("modes"),
        py::arg("points"), py::arg("ensemble"), py::arg("policy"),
        py::call_guard<py::gil_scoped_release>());

  // continuation
  m.def("continued_mode_correlation", &continued_mode_correlation,
        py::arg("n"), py::arg("dt"), py::arg("nu"), py::arg("params"));

  py::class_<PropagatorValue>(m, "PropagatorValue")
      .def_readonly("value", &PropagatorValue::value)
      .def_readonly("sys_err", &PropagatorValue::sys_err);

  m.def("feynman_propagator", &feynman_propagator, py::arg("dp"),
        py::arg("params"), py::arg("branch") = +1,
        py::call_guard<py::gil_scoped_release>());
  m.def("npoint_continued", &npoint_continued, py::arg("points"),
        py::arg("branch"), py::arg("params"),
        py::arg("max_n") = kDefaultMaxWickOrder,
        py::call_guard<py::gil_scoped_release>());

  py::class_<BoostPair>(m, "BoostPair")
      .def(py::init([](const SpacetimePoint& a, const SpacetimePoint& b) {
             return BoostPair{a, b};
           }),
           py::arg("a"), py::arg("b"))
      .def_readwrite("a", &BoostPair::a)
      .def_readwrite("b", &BoostPair::b);

  py::class_<InvarianceRow>(m, "InvarianceRow")
      .def_readonly("pair", &InvarianceRow::pair)
      .def_readonly("value_a", &InvarianceRow::value_a)
      .def_readonly("value_b", &InvarianceRow::value_b)
      .def_readonly("residual", &InvarianceRow::residual);

  m.def("lorentz_invariance_check", &lorentz_invariance_check,
        py::arg("pairs"), py::arg("params"),
        py::call_guard<py::gil_scoped_release>());
  m.def("standard_boost_pairs", &standard_boost_pairs);
}
