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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydgate/exposure.hpp"
#include "rydgate/noise.hpp"
#include "rydgate/protocol.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

/// Malformed or out-of-range configuration. `field` is the dotted JSON path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class GateKind { cz, cnot };
enum class SamplingMode { grid, mc, both };
enum class SweepAxis { separation, omega, temperature };

/// Every run setting. Input frequencies are in MHz (converted x 2pi to rad/us
/// internally); lengths in um, temperatures in uK, lifetimes in ms.
/// Defaults reproduce the 97S_1/2 CZ setup at Omega = 2pi x 0.8 MHz.
struct RunConfig {
  GateKind gate = GateKind::cz;
  double theta_rad = kPi;
  double omega_c_mhz = 0.8;
  double omega_t_mhz = 0.8;
  double c6_thz_um6 = 39.5;
  std::optional<double> interaction_override_mhz;
  std::optional<double> trap_separation_um;

  struct Noise {
    double sigma_z0_um = 1.47;
    double sigma_perp0_um = 0.27;
    double temperature_uk = 10.0;
    double atom_mass_amu = kRubidium87MassAmu;
    double lifetime_room_ms = 0.311;
    double lifetime_cryo_ms = 1.10;

    bool operator==(const Noise&) const = default;
  } noise;

  struct Sampling {
    SamplingMode mode = SamplingMode::grid;
    std::vector<double> deltas = {0.25, 0.2, 0.15, 0.12, 0.1};
    double half_range_sigma = 1.5;
    std::uint64_t mc_samples = 1'000'000;
    std::optional<double> mc_truncation_sigma;
    std::uint64_t seed = 20211;
    std::uint64_t table_points = DistanceFidelity::kDefaultPoints;
    int threads = 1;

    bool operator==(const Sampling&) const = default;
  } sampling;

  int exposure_steps_per_pulse = kDefaultExposureSteps;

  struct Sweep {
    SweepAxis axis = SweepAxis::separation;
    std::vector<double> values;  // sorted ascending after parsing
    double delta = 0.25;

    bool operator==(const Sweep&) const = default;
  } sweep;

  struct Output {
    std::optional<std::string> path;
    std::optional<std::string> format;  // "csv" | "json"

    bool operator==(const Output&) const = default;
  } output;

  bool operator==(const RunConfig&) const = default;
};

/// Parses and validates; missing keys take their defaults, unknown keys are
/// rejected. Throws ConfigError naming the offending field.
RunConfig config_from_json(const nlohmann::json& j);

/// Fully populated document; config_from_json(config_to_json(c)) == c.
nlohmann::json config_to_json(const RunConfig& c);

/// Reads a JSON file. Throws ConfigError for unreadable or unparsable files.
RunConfig load_config(const std::string& path);

std::string to_string(GateKind g);
std::string to_string(SamplingMode m);
std::string to_string(SweepAxis a);

// Derived physical quantities in internal units.
VdwModel vdw_model(const RunConfig& c);
ProtocolParams protocol_params(const RunConfig& c);
GateProtocol build_protocol(const RunConfig& c, const ProtocolParams& p);
NoiseConfig noise_config(const RunConfig& c, double trap_separation, double lifetime_ms);

}  // namespace rydgate
