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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydgate/fidelity.hpp"
#include "rydgate/noise.hpp"
#include "rydgate/protocol.hpp"

namespace rydgate {

/// Solved design values in user units.
struct SolvedParams {
  double theta_rad = 0.0;
  double omega_c_mhz = 0.0;
  double omega_t_mhz = 0.0;
  double interaction_mhz = 0.0;
  double t0_us = 0.0;
  double t_gate_us = 0.0;
  double separation_um = 0.0;

  bool operator==(const SolvedParams&) const = default;
};

SolvedParams solved_params(const ProtocolParams& p);

struct ResultRecord {
  std::string run_id;
  std::string timestamp;
  std::string command;
  nlohmann::json config;  // full echo; rerunning it reproduces the record
  SolvedParams params;

  std::optional<double> interaction_used_mhz;
  std::optional<double> trap_separation_um;
  std::optional<Matrix4> gate_matrix;
  std::optional<double> nominal_fidelity;
  std::optional<double> t_ryd_us;
  std::optional<double> e_decay_room;
  std::optional<double> e_decay_cryo;
  std::optional<FidelityReport> grid;
  std::optional<FidelityReport> monte_carlo;
  std::optional<double> axis_value;  // sweep rows only

  bool operator==(const ResultRecord& other) const;
};

nlohmann::json record_to_json(const ResultRecord& r);
ResultRecord record_from_json(const nlohmann::json& j);

/// Deterministic id from the command and the config echo (FNV-1a, hex).
std::string make_run_id(const std::string& command, const nlohmann::json& config);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

/// Plain comma-separated table; cells never contain commas or quotes.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Shortest decimal form that parses back to the same double ("nan" for NaN).
std::string format_double(double v);

void write_csv(std::ostream& out, const CsvTable& table);
CsvTable read_csv(std::istream& in);

/// Rows (method, delta, meanFidelity, netFidelity300K, netFidelity4K, samples, wallTime)
/// from a fidelity run: one per grid step, the extrapolated grid estimate,
/// then the Monte Carlo estimate.
CsvTable fidelity_table(const ResultRecord& r);

/// One row per sweep record.
CsvTable sweep_table(const std::string& axis, const std::vector<ResultRecord>& rows);

/// Scalar fields of a solve/simulate record as a single row.
CsvTable record_table(const ResultRecord& r);

}  // namespace rydgate
