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

#include "rydgate/pulse.hpp"

#include <cmath>

#include "rydgate/error.hpp"

namespace rydgate {

void validate(const GateProtocol& protocol) {
  if (!std::isfinite(protocol.nominal_interaction)) {
    throw InvalidParameter("nominal interaction must be finite");
  }
  for (const PulseSpec& p : protocol.pulses) {
    if (!std::isfinite(p.duration) || p.duration <= 0.0) {
      throw InvalidParameter("pulse duration must be positive");
    }
    for (const Coupling& c : p.couplings) {
      if (c.from == c.to) {
        throw InvalidParameter("coupling must connect two distinct levels");
      }
      if (!std::isfinite(c.amplitude.real()) || !std::isfinite(c.amplitude.imag())) {
        throw InvalidParameter("coupling amplitude must be finite");
      }
    }
  }
}

Hamiltonian pulse_hamiltonian(const PulseSpec& pulse, double interaction) {
  std::vector<Drive> drives;
  drives.reserve(pulse.couplings.size());
  for (const Coupling& c : pulse.couplings) {
    drives.push_back({pulse.actor, c.from, c.to, c.amplitude});
  }
  return build_hamiltonian(drives, interaction);
}

std::vector<PropagatorSegment> protocol_propagators(const GateProtocol& protocol, double interaction) {
  std::vector<PropagatorSegment> out;
  out.reserve(protocol.pulses.size());
  for (const PulseSpec& p : protocol.pulses) {
    out.push_back(exponentiate(pulse_hamiltonian(p, interaction), p.duration));
  }
  return out;
}

Operator protocol_unitary(const GateProtocol& protocol, double interaction) {
  Operator u = Operator::Identity();
  for (const PropagatorSegment& s : protocol_propagators(protocol, interaction)) {
    u = s.unitary * u;
  }
  return u;
}

double total_duration(const GateProtocol& protocol) {
  double t = 0.0;
  for (const PulseSpec& p : protocol.pulses) t += p.duration;
  return t;
}

}  // namespace rydgate
