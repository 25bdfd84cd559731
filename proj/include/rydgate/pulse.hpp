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

#include <span>
#include <vector>

#include "rydgate/quantum_core.hpp"

namespace rydgate {

struct Coupling {
  Level from = Level::g1;
  Level to = Level::ryd;
  Complex amplitude{0.0, 0.0};  // rad/us
};

/// A constant-amplitude laser pulse on one atom. Several couplings may act
/// simultaneously (e.g. g0->r and g1->r during the CNOT target pulse).
struct PulseSpec {
  Atom actor = Atom::control;
  std::vector<Coupling> couplings;
  double duration = 0.0;  // us
};

struct TargetGate {
  enum class Kind { controlled_phase, cnot };

  Kind kind = Kind::controlled_phase;
  double theta = 0.0;  // radians; only meaningful for controlled_phase

  static TargetGate controlled_phase(double theta) { return {Kind::controlled_phase, theta}; }
  static TargetGate cnot() { return {Kind::cnot, 0.0}; }
};

struct GateProtocol {
  std::vector<PulseSpec> pulses;
  double nominal_interaction = 0.0;  // rad/us
  TargetGate target;
};

/// Throws InvalidParameter unless every pulse has a positive finite duration
/// and finite amplitudes on distinct levels.
void validate(const GateProtocol& protocol);

Hamiltonian pulse_hamiltonian(const PulseSpec& pulse, double interaction);

/// One propagator per pulse, evaluated at `interaction`.
std::vector<PropagatorSegment> protocol_propagators(const GateProtocol& protocol, double interaction);

/// Full 9x9 propagator of the whole sequence (identity for an empty protocol).
Operator protocol_unitary(const GateProtocol& protocol, double interaction);

double total_duration(const GateProtocol& protocol);

}  // namespace rydgate
