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

#include <numbers>

// Internal unit system: time in us, angular frequency in rad/us, length in um,
// hbar = 1. An energy E is always stored as E/hbar.
namespace rydgate {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kRubidium87MassAmu = 86.909180527;
inline constexpr double kRubidium87Mass = kRubidium87MassAmu * kAtomicMassUnit;

/// f in MHz (cycles per us) to angular frequency in rad/us.
constexpr double angular_from_mhz(double f_mhz) noexcept { return kTwoPi * f_mhz; }
constexpr double mhz_from_angular(double omega) noexcept { return omega / kTwoPi; }

constexpr double us_from_ms(double t_ms) noexcept { return 1e3 * t_ms; }

/// C6/hbar for |97S_1/2> pairs of 87Rb: C6 = h x 39.5 THz um^6.
inline constexpr double kDefaultC6OverHbar = kTwoPi * 3.95e7;  // rad/us um^6

}  // namespace rydgate
