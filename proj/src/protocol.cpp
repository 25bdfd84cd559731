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

#include "rydgate/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rydgate/error.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

namespace {

constexpr double kConsistencyTolerance = 1e-9;

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

void check_rabi(double omega, const char* what) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw InvalidParameter(std::string(what) + " must be positive");
  }
}

PulseSpec control_pi_pulse(double omega_c, double sign) {
  return {Atom::control, {{Level::g1, Level::ryd, Complex(sign * omega_c, 0.0)}}, kPi / omega_c};
}

}  // namespace

double generalized_rabi(double omega_t, double interaction) { return std::hypot(omega_t, interaction); }

double controlled_phase(double interaction, double omega_t) {
  const double phase = -kTwoPi * interaction / generalized_rabi(omega_t, interaction);
  double wrapped = std::fmod(phase, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  return wrapped >= kTwoPi ? 0.0 : wrapped;
}

double solve_interaction_for_phase(double theta, double omega_t) {
  check_rabi(omega_t, "omega_t");
  if (!std::isfinite(theta) || theta <= 0.0 || theta >= kTwoPi) {
    throw InvalidParameter("theta must lie in (0, 2pi)");
  }
  // theta = 2pi (1 - V/Omega_bar) with the integer addend fixed to one turn.
  const double x = 1.0 - theta / kTwoPi;
  const double denom = std::sqrt((1.0 - x) * (1.0 + x));
  const double v = omega_t * x / denom;
  if (!(denom > 0.0) || !std::isfinite(v)) {
    throw InvalidParameter("theta too close to 0: required interaction diverges");
  }
  return v;
}

ProtocolParams design_protocol(double omega_c, double omega_t, double theta, const VdwModel& vdw) {
  check_rabi(omega_c, "omega_c");
  ProtocolParams p;
  p.omega_c = omega_c;
  p.omega_t = omega_t;
  p.theta = theta;
  p.interaction = solve_interaction_for_phase(theta, omega_t);
  p.t0 = kTwoPi / generalized_rabi(omega_t, p.interaction);
  p.t_gate = gate_duration(p);
  p.separation = separation_for_interaction(vdw, p.interaction);
  return p;
}

void validate(const ProtocolParams& p) {
  check_rabi(p.omega_c, "omega_c");
  check_rabi(p.omega_t, "omega_t");
  if (!std::isfinite(p.interaction)) {
    throw InvalidParameter("interaction must be finite");
  }
  if (!close(p.t0, kTwoPi / generalized_rabi(p.omega_t, p.interaction), kConsistencyTolerance)) {
    throw InvalidParameter("t0 inconsistent with omega_t and interaction");
  }
  if (!close(p.t_gate, kTwoPi / p.omega_c + 2.0 * p.t0, kConsistencyTolerance)) {
    throw InvalidParameter("t_gate inconsistent with omega_c and t0");
  }
  // Compare on the circle so that theta near 0 and near 2pi are treated alike.
  const double diff = std::remainder(p.theta - controlled_phase(p.interaction, p.omega_t), kTwoPi);
  if (std::abs(diff) > kConsistencyTolerance) {
    throw InvalidParameter("theta inconsistent with omega_t and interaction");
  }
}

GateProtocol build_cz_protocol(const ProtocolParams& params) {
  validate(params);
  const Complex target_amp(params.omega_t, 0.0);
  GateProtocol g;
  g.nominal_interaction = params.interaction;
  g.target = TargetGate::controlled_phase(params.theta);
  g.pulses = {
      control_pi_pulse(params.omega_c, +1.0),
      {Atom::target, {{Level::g1, Level::ryd, target_amp}}, params.t0},
      {Atom::target, {{Level::g1, Level::ryd, -target_amp}}, params.t0},
      control_pi_pulse(params.omega_c, -1.0),
  };
  return g;
}

GateProtocol build_cnot_protocol(const ProtocolParams& params) {
  validate(params);
  if (std::abs(params.theta - kPi) > 1e-12) {
    throw InvalidParameter("CNOT protocol requires theta = pi");
  }
  const Complex half_amp(params.omega_t / std::sqrt(2.0), 0.0);
  GateProtocol g;
  g.nominal_interaction = params.interaction;
  g.target = TargetGate::cnot();
  g.pulses = {
      control_pi_pulse(params.omega_c, +1.0),
      {Atom::target, {{Level::g0, Level::ryd, half_amp}, {Level::g1, Level::ryd, half_amp}}, params.t0},
      {Atom::target, {{Level::g0, Level::ryd, -half_amp}, {Level::g1, Level::ryd, -half_amp}}, params.t0},
      control_pi_pulse(params.omega_c, +1.0),
  };
  return g;
}

double gate_duration(const ProtocolParams& params) {
  check_rabi(params.omega_c, "omega_c");
  return kTwoPi / params.omega_c + 2.0 * kTwoPi / generalized_rabi(params.omega_t, params.interaction);
}

double hyperfine_leakage_estimate(double omega_t, double hyperfine_splitting) {
  if (!std::isfinite(hyperfine_splitting) || hyperfine_splitting <= 0.0) {
    throw InvalidParameter("hyperfine splitting must be positive");
  }
  const double r = omega_t / hyperfine_splitting;
  return 2.0 * r * r;
}

}  // namespace rydgate
