// Copyright 2026 The rydgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rydgate/cli.hpp"
#include "rydgate/error.hpp"
#include "rydgate/exposure.hpp"

namespace py = pybind11;
using namespace rydgate;

namespace {

RunConfig config_from(const py::object& cfg) {
  if (cfg.is_none()) return RunConfig{};
  const std::string text = py::module_::import("json").attr("dumps")(cfg).cast<std::string>();
  return config_from_json(nlohmann::json::parse(text));
}

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rydberg CZ(theta) and CNOT gates from detuned Rabi cycles.";

  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("angular_from_mhz", &angular_from_mhz);
  m.def("mhz_from_angular", &mhz_from_angular);

  py::class_<VdwModel>(m, "VdwModel")
      .def(py::init<>())
      .def(py::init([](double c6) { return VdwModel{c6}; }), py::arg("c6_over_hbar"))
      .def_readwrite("c6_over_hbar", &VdwModel::c6_over_hbar);

  m.def("vdw_interaction", &vdw_interaction, py::arg("model"), py::arg("dist"));
  m.def("separation_for_interaction", &separation_for_interaction, py::arg("model"), py::arg("interaction"));
  m.def(
      "distance",
      [](std::array<double, 3> c, std::array<double, 3> t, double l) {
        return distance({{c[0], c[1], c[2]}, {t[0], t[1], t[2]}, l});
      },
      py::arg("control_offset"), py::arg("target_offset"), py::arg("trap_separation"));

  py::class_<ProtocolParams>(m, "ProtocolParams")
      .def_readonly("omega_c", &ProtocolParams::omega_c)
      .def_readonly("omega_t", &ProtocolParams::omega_t)
      .def_readonly("interaction", &ProtocolParams::interaction)
      .def_readonly("theta", &ProtocolParams::theta)
      .def_readonly("t0", &ProtocolParams::t0)
      .def_readonly("t_gate", &ProtocolParams::t_gate)
      .def_readonly("separation", &ProtocolParams::separation);

  m.def("solve_interaction_for_phase", &solve_interaction_for_phase, py::arg("theta"), py::arg("omega_t"));
  m.def("controlled_phase", &controlled_phase, py::arg("interaction"), py::arg("omega_t"));
  m.def("design_protocol", &design_protocol, py::arg("omega_c"), py::arg("omega_t"), py::arg("theta"),
        py::arg("vdw") = VdwModel{});
  m.def("gate_duration", &gate_duration, py::arg("params"));
  m.def("hyperfine_leakage_estimate", &hyperfine_leakage_estimate, py::arg("omega_t"), py::arg("hyperfine_splitting"));

  py::class_<GateProtocol>(m, "GateProtocol")
      .def_readonly("nominal_interaction", &GateProtocol::nominal_interaction)
      .def_property_readonly("durations",
                             [](const GateProtocol& g) {
                               std::vector<double> d;
                               for (const PulseSpec& p : g.pulses) d.push_back(p.duration);
                               return d;
                             })
      .def_property_readonly("total_duration", &total_duration);

  m.def("build_cz_protocol", &build_cz_protocol, py::arg("params"));
  m.def("build_cnot_protocol", &build_cnot_protocol, py::arg("params"));

  m.def(
      "gate_matrix",
      [](const GateProtocol& g, std::optional<double> v) {
        return v ? extract_gate_matrix(g, *v).m : extract_gate_matrix(g).m;
      },
      py::arg("protocol"), py::arg("interaction") = py::none(),
      "4x4 computational block of the propagated gate, global phase removed.");
  m.def(
      "ideal_gate", [](const GateProtocol& g) { return IdealGate::for_target(g.target).u; }, py::arg("protocol"));
  m.def(
      "pedersen_fidelity", [](const Matrix4& actual, const Matrix4& ideal) { return pedersen_fidelity({actual}, {ideal}); },
      py::arg("actual"), py::arg("ideal"));
  m.def(
      "rydberg_exposure", [](const GateProtocol& g, int steps) { return rydberg_exposure(g, steps); },
      py::arg("protocol"), py::arg("steps_per_pulse") = kDefaultExposureSteps);
  m.def("decay_error_from_exposure", &decay_error_from_exposure, py::arg("t_ryd"), py::arg("lifetime_ms"));

  py::class_<NoiseConfig>(m, "NoiseConfig")
      .def(py::init<>())
      .def_readwrite("sigma_z0", &NoiseConfig::sigma_z0)
      .def_readwrite("sigma_perp0", &NoiseConfig::sigma_perp0)
      .def_readwrite("temperature", &NoiseConfig::temperature)
      .def_readwrite("atom_mass", &NoiseConfig::atom_mass)
      .def_readwrite("rydberg_lifetime", &NoiseConfig::rydberg_lifetime)
      .def_readwrite("trap_separation", &NoiseConfig::trap_separation);

  py::class_<InflatedSigmas>(m, "InflatedSigmas")
      .def(py::init<>())
      .def_readwrite("sigma_z", &InflatedSigmas::sigma_z)
      .def_readwrite("sigma_perp", &InflatedSigmas::sigma_perp)
      .def_readonly("flight_length", &InflatedSigmas::flight_length)
      .def_readonly("v_rms", &InflatedSigmas::v_rms);

  m.def("inflate_sigmas", &inflate_sigmas, py::arg("cfg"), py::arg("gate_duration"));

  py::class_<FidelityReport>(m, "FidelityReport")
      .def_readonly("mean_fidelity", &FidelityReport::mean_fidelity)
      .def_readonly("std_error", &FidelityReport::std_error)
      .def_readonly("decay_error", &FidelityReport::decay_error)
      .def_readonly("net_fidelity", &FidelityReport::net_fidelity)
      .def_readonly("sample_count", &FidelityReport::sample_count)
      .def_property_readonly("convergence", [](const FidelityReport& r) {
        std::vector<std::pair<double, double>> out;
        for (const ConvergencePoint& p : r.convergence) out.emplace_back(p.delta, p.mean_fidelity);
        return out;
      });

  m.def(
      "grid_average_fidelity",
      [](const GateProtocol& g, const VdwModel& vdw, const InflatedSigmas& s, double l, double delta,
         double half_range) { return grid_average_fidelity(g, vdw, s, l, {delta, half_range}); },
      py::arg("protocol"), py::arg("vdw"), py::arg("sigmas"), py::arg("trap_separation"), py::arg("delta") = 0.1,
      py::arg("half_range") = 1.5, py::call_guard<py::gil_scoped_release>());
  m.def(
      "monte_carlo_average_fidelity",
      [](const GateProtocol& g, const VdwModel& vdw, const InflatedSigmas& s, double l, std::uint64_t n,
         std::uint64_t seed, std::optional<double> truncation, int threads) {
        return monte_carlo_average_fidelity(g, vdw, s, l, {n, seed, truncation, threads});
      },
      py::arg("protocol"), py::arg("vdw"), py::arg("sigmas"), py::arg("trap_separation"), py::arg("samples") = 1000000,
      py::arg("seed") = 20211, py::arg("truncation") = py::none(), py::arg("threads") = 1,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "solve", [](const py::object& cfg) { return to_python(record_to_json(cmd_solve(config_from(cfg)))); },
      py::arg("config") = py::none(), "Run the `solve` command; returns the result record as a dict.");
  m.def(
      "simulate", [](const py::object& cfg) { return to_python(record_to_json(cmd_simulate(config_from(cfg)))); },
      py::arg("config") = py::none());
  m.def(
      "fidelity", [](const py::object& cfg) { return to_python(record_to_json(cmd_fidelity(config_from(cfg)))); },
      py::arg("config") = py::none());
  m.def(
      "sweep",
      [](const py::object& cfg) {
        py::list rows;
        for (const ResultRecord& r : cmd_sweep(config_from(cfg))) rows.append(to_python(record_to_json(r)));
        return rows;
      },
      py::arg("config"));
}
