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

#pragma once

#include "rydgate/interaction.hpp"
#include "rydgate/pulse.hpp"

namespace rydgate {

/// Nominal design point of a three-step gate. All frequencies in rad/us.
struct ProtocolParams {
  double omega_c = 0.0;      // control Rabi frequency
  double omega_t = 0.0;      // target Rabi frequency
  double interaction = 0.0;  // V/hbar at the design separation
  double theta = 0.0;        // controlled phase, (0, 2pi)
  double t0 = 0.0;           // duration of each half of the target pulse, us
  double t_gate = 0.0;       // us
  double separation = 0.0;   // trap separation, um
};

/// sqrt(omega_t^2 + V^2).
double generalized_rabi(double omega_t, double interaction);

/// Conditional phase -2 pi V / sqrt(omega_t^2 + V^2), reduced to [0, 2pi).
double controlled_phase(double interaction, double omega_t);

/// Inverse of controlled_phase on (0, 2pi): with x = 1 - theta/2pi,
/// V = omega_t x / sqrt(1 - x^2).
///
/// Throws InvalidParameter for theta outside (0, 2pi), omega_t <= 0, or a
/// theta so close to 0 that V overflows.
double solve_interaction_for_phase(double theta, double omega_t);

/// Complete design: V from (theta, omega_t), then t0, t_gate and the trap
/// separation through the vdW law.
ProtocolParams design_protocol(double omega_c, double omega_t, double theta, const VdwModel& vdw = {});

/// Throws InvalidParameter unless the derived fields agree with
/// (omega_c, omega_t, interaction): t0 = 2pi/Omega_bar, t_gate = 2pi/omega_c + 2 t0,
/// theta = controlled_phase(interaction, omega_t).
void validate(const ProtocolParams& params);

/// Controlled-phase sequence: control pi pulse (+omega_c), target +omega_t for
/// t0, target -omega_t for t0, control pi pulse (-omega_c).
GateProtocol build_cz_protocol(const ProtocolParams& params);

/// CNOT sequence: as CZ(pi) but the target halves drive g0->r and g1->r
/// together at +-omega_t/sqrt(2), and both control pulses use +omega_c.
/// Throws InvalidParameter unless theta == pi.
GateProtocol build_cnot_protocol(const ProtocolParams& params);

/// 2pi/omega_c + 4pi/Omega_bar.
double gate_duration(const ProtocolParams& params);

/// Off-resonant Rydberg excitation probability of |0>, 2 (omega_t / E_hyper)^2.
/// Advisory only; never enters the dynamics.
double hyperfine_leakage_estimate(double omega_t, double hyperfine_splitting);

}  // namespace rydgate
