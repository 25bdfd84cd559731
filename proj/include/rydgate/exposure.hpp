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

#include <array>
#include <span>

#include "rydgate/pulse.hpp"

namespace rydgate {

/// |00>, |01>, |10>, |11>.
std::array<TwoAtomState, 4> computational_basis_states();

inline constexpr int kDefaultExposureSteps = 2000;

/// Time-integrated Rydberg population (us), averaged over `inputs`.
///
/// For each input the expected number of Rydberg atoms is integrated along
/// the exact trajectory with composite Simpson at step <= dt inside every
/// pulse. The result is recomputed at dt/2 and must agree to 1e-4 relative,
/// otherwise NumericError is thrown; the finer value is returned.
///
/// With the four computational basis states as inputs this is the total
/// Rydberg dwell time that sets the decay error, T_Ryd.
///
/// Throws InvalidParameter if inputs is empty, dt <= 0, or dt is not shorter
/// than the shortest pulse.
double rydberg_exposure(std::span<const TwoAtomState> inputs, const GateProtocol& protocol, double dt,
                        double interaction);

/// Same, at the protocol's nominal interaction.
double rydberg_exposure(std::span<const TwoAtomState> inputs, const GateProtocol& protocol, double dt);

/// T_Ryd at the nominal interaction, averaged over the four computational
/// basis inputs, with dt = (shortest pulse) / steps_per_pulse.
double rydberg_exposure(const GateProtocol& protocol, int steps_per_pulse = kDefaultExposureSteps);

}  // namespace rydgate
