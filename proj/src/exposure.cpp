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

#include "rydgate/exposure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rydgate/error.hpp"

namespace rydgate {

namespace {

constexpr double kConvergenceTolerance = 1e-4;

using StateBlock = Eigen::Matrix<Complex, kDim, Eigen::Dynamic>;

double summed_population(const StateBlock& states) {
  double n = 0.0;
  for (Eigen::Index j = 0; j < states.cols(); ++j) {
    n += TwoAtomState(states.col(j)).rydberg_population();
  }
  return n;
}

// Sum over inputs of the integrated population, composite Simpson per pulse.
double integrate_population(StateBlock states, const GateProtocol& protocol, double dt, double interaction) {
  double total = 0.0;
  for (const PulseSpec& pulse : protocol.pulses) {
    long steps = static_cast<long>(std::ceil(pulse.duration / dt));
    steps = std::max(2L, steps + (steps % 2));
    const double h = pulse.duration / static_cast<double>(steps);
    const Operator step = exponentiate(pulse_hamiltonian(pulse, interaction), h).unitary;

    double acc = summed_population(states);
    for (long k = 1; k <= steps; ++k) {
      states = step * states;
      const double w = k == steps ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
      acc += w * summed_population(states);
    }
    total += acc * h / 3.0;
  }
  return total;
}

double shortest_pulse(const GateProtocol& protocol) {
  double shortest = std::numeric_limits<double>::infinity();
  for (const PulseSpec& p : protocol.pulses) shortest = std::min(shortest, p.duration);
  return shortest;
}

}  // namespace

std::array<TwoAtomState, 4> computational_basis_states() {
  return {TwoAtomState::basis(Level::g0, Level::g0), TwoAtomState::basis(Level::g0, Level::g1),
          TwoAtomState::basis(Level::g1, Level::g0), TwoAtomState::basis(Level::g1, Level::g1)};
}

double rydberg_exposure(std::span<const TwoAtomState> inputs, const GateProtocol& protocol, double dt,
                        double interaction) {
  if (inputs.empty()) {
    throw InvalidParameter("rydberg_exposure needs at least one input state");
  }
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw InvalidParameter("quadrature step must be positive");
  }
  validate(protocol);
  if (protocol.pulses.empty()) return 0.0;
  if (dt >= shortest_pulse(protocol)) {
    throw InvalidParameter("quadrature step must be shorter than the shortest pulse");
  }

  StateBlock states(kDim, static_cast<Eigen::Index>(inputs.size()));
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    states.col(static_cast<Eigen::Index>(j)) = inputs[j].amplitudes();
  }

  const double count = static_cast<double>(inputs.size());
  const double coarse = integrate_population(states, protocol, dt, interaction) / count;
  const double fine = integrate_population(states, protocol, 0.5 * dt, interaction) / count;
  if (std::abs(fine - coarse) > kConvergenceTolerance * std::max(std::abs(fine), 1e-300)) {
    throw NumericError("Rydberg exposure quadrature did not converge; reduce dt");
  }
  return fine;
}

double rydberg_exposure(std::span<const TwoAtomState> inputs, const GateProtocol& protocol, double dt) {
  return rydberg_exposure(inputs, protocol, dt, protocol.nominal_interaction);
}

double rydberg_exposure(const GateProtocol& protocol, int steps_per_pulse) {
  if (steps_per_pulse < 2) {
    throw InvalidParameter("steps_per_pulse must be at least 2");
  }
  validate(protocol);
  if (protocol.pulses.empty()) return 0.0;
  const auto inputs = computational_basis_states();
  return rydberg_exposure(inputs, protocol, shortest_pulse(protocol) / steps_per_pulse);
}

}  // namespace rydgate
