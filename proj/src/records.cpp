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

#include "rydgate/records.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "rydgate/units.hpp"

namespace rydgate {

using nlohmann::json;

SolvedParams solved_params(const ProtocolParams& p) {
  return {p.theta,           mhz_from_angular(p.omega_c), mhz_from_angular(p.omega_t), mhz_from_angular(p.interaction),
          p.t0,              p.t_gate,                    p.separation};
}

bool ResultRecord::operator==(const ResultRecord& o) const {
  const bool matrices_equal = gate_matrix.has_value() == o.gate_matrix.has_value() &&
                              (!gate_matrix || *gate_matrix == *o.gate_matrix);
  return run_id == o.run_id && timestamp == o.timestamp && command == o.command && config == o.config &&
         params == o.params && interaction_used_mhz == o.interaction_used_mhz &&
         trap_separation_um == o.trap_separation_um && matrices_equal && nominal_fidelity == o.nominal_fidelity &&
         t_ryd_us == o.t_ryd_us && e_decay_room == o.e_decay_room && e_decay_cryo == o.e_decay_cryo &&
         grid == o.grid && monte_carlo == o.monte_carlo && axis_value == o.axis_value;
}

namespace {

json report_to_json(const FidelityReport& r) {
  json series = json::array();
  for (const ConvergencePoint& p : r.convergence) {
    series.push_back(
        {{"delta", p.delta}, {"mean_fidelity", p.mean_fidelity}, {"samples", p.samples}, {"wall_seconds", p.wall_seconds}});
  }
  return {{"mean_fidelity", r.mean_fidelity}, {"std_error", r.std_error},       {"decay_error", r.decay_error},
          {"net_fidelity", r.net_fidelity},   {"sample_count", r.sample_count}, {"convergence", series}};
}

FidelityReport report_from_json(const json& j) {
  FidelityReport r;
  r.mean_fidelity = j.at("mean_fidelity").get<double>();
  r.std_error = j.at("std_error").get<double>();
  r.decay_error = j.at("decay_error").get<double>();
  r.net_fidelity = j.at("net_fidelity").get<double>();
  r.sample_count = j.at("sample_count").get<std::uint64_t>();
  for (const json& p : j.at("convergence")) {
    r.convergence.push_back({p.at("delta").get<double>(), p.at("mean_fidelity").get<double>(),
                             p.at("samples").get<std::uint64_t>(), p.at("wall_seconds").get<double>()});
  }
  return r;
}

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
std::optional<T> get(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

std::string cell(const std::optional<double>& v) {
  return format_double(v.value_or(std::numeric_limits<double>::quiet_NaN()));
}

}  // namespace

json record_to_json(const ResultRecord& r) {
  json j;
  j["run_id"] = r.run_id;
  j["timestamp"] = r.timestamp;
  j["command"] = r.command;
  j["config"] = r.config;
  j["params"] = {{"theta_rad", r.params.theta_rad},         {"omega_c_mhz", r.params.omega_c_mhz},
                 {"omega_t_mhz", r.params.omega_t_mhz},     {"interaction_mhz", r.params.interaction_mhz},
                 {"t0_us", r.params.t0_us},                 {"t_gate_us", r.params.t_gate_us},
                 {"separation_um", r.params.separation_um}};
  put(j, "interaction_used_mhz", r.interaction_used_mhz);
  put(j, "trap_separation_um", r.trap_separation_um);
  if (r.gate_matrix) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
      json row = json::array();
      for (int k = 0; k < 4; ++k) row.push_back({(*r.gate_matrix)(i, k).real(), (*r.gate_matrix)(i, k).imag()});
      rows.push_back(row);
    }
    j["gate_matrix"] = rows;
  }
  put(j, "nominal_fidelity", r.nominal_fidelity);
  put(j, "t_ryd_us", r.t_ryd_us);
  put(j, "e_decay_room", r.e_decay_room);
  put(j, "e_decay_cryo", r.e_decay_cryo);
  if (r.grid) j["grid"] = report_to_json(*r.grid);
  if (r.monte_carlo) j["monte_carlo"] = report_to_json(*r.monte_carlo);
  put(j, "axis_value", r.axis_value);
  return j;
}

ResultRecord record_from_json(const json& j) {
  ResultRecord r;
  r.run_id = j.at("run_id").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  const json& p = j.at("params");
  r.params = {p.at("theta_rad").get<double>(),       p.at("omega_c_mhz").get<double>(), p.at("omega_t_mhz").get<double>(),
              p.at("interaction_mhz").get<double>(), p.at("t0_us").get<double>(),       p.at("t_gate_us").get<double>(),
              p.at("separation_um").get<double>()};
  r.interaction_used_mhz = get<double>(j, "interaction_used_mhz");
  r.trap_separation_um = get<double>(j, "trap_separation_um");
  if (auto it = j.find("gate_matrix"); it != j.end()) {
    Matrix4 m;
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) {
        const json& z = (*it)[i][k];
        m(i, k) = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    r.gate_matrix = m;
  }
  r.nominal_fidelity = get<double>(j, "nominal_fidelity");
  r.t_ryd_us = get<double>(j, "t_ryd_us");
  r.e_decay_room = get<double>(j, "e_decay_room");
  r.e_decay_cryo = get<double>(j, "e_decay_cryo");
  if (auto it = j.find("grid"); it != j.end()) r.grid = report_from_json(*it);
  if (auto it = j.find("monte_carlo"); it != j.end()) r.monte_carlo = report_from_json(*it);
  r.axis_value = get<double>(j, "axis_value");
  return r;
}

std::string make_run_id(const std::string& command, const json& config) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : command + "\n" + config.dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

CsvTable read_csv(std::istream& in) {
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, ',')) cells.push_back(cur);
    if (!s.empty() && s.back() == ',') cells.emplace_back();
    return cells;
  };
  CsvTable t;
  std::string line;
  if (std::getline(in, line)) t.header = split(line);
  while (std::getline(in, line)) {
    if (!line.empty()) t.rows.push_back(split(line));
  }
  return t;
}

CsvTable fidelity_table(const ResultRecord& r) {
  CsvTable t;
  t.header = {"method", "delta", "meanFidelity", "netFidelity300K", "netFidelity4K", "samples", "wallTime"};
  const double room = r.e_decay_room.value_or(0.0);
  const double cryo = r.e_decay_cryo.value_or(0.0);
  auto row = [&](const std::string& method, double delta, double mean, std::uint64_t samples, double wall) {
    t.rows.push_back({method, format_double(delta), format_double(mean), format_double(mean - room),
                      format_double(mean - cryo), std::to_string(samples), format_double(wall)});
  };
  if (r.grid) {
    for (const ConvergencePoint& p : r.grid->convergence) row("grid", p.delta, p.mean_fidelity, p.samples, p.wall_seconds);
    if (r.grid->convergence.size() > 1) row("grid-extrapolated", 0.0, r.grid->mean_fidelity, r.grid->sample_count, 0.0);
  }
  if (r.monte_carlo) {
    const double wall = r.monte_carlo->convergence.empty() ? 0.0 : r.monte_carlo->convergence.front().wall_seconds;
    row("mc", std::numeric_limits<double>::quiet_NaN(), r.monte_carlo->mean_fidelity, r.monte_carlo->sample_count, wall);
  }
  return t;
}

CsvTable sweep_table(const std::string& axis, const std::vector<ResultRecord>& rows) {
  CsvTable t;
  t.header = {"axis",           "value",         "theta_rad",        "interaction_mhz",
              "trap_separation_um", "t0_us",     "t_gate_us",        "nominal_fidelity",
              "mean_fidelity",  "net_fidelity_300k", "net_fidelity_4k", "t_ryd_us"};
  for (const ResultRecord& r : rows) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double mean = r.grid ? r.grid->mean_fidelity : nan;
    const double net_room = mean - r.e_decay_room.value_or(nan);
    const double net_cryo = mean - r.e_decay_cryo.value_or(nan);
    t.rows.push_back({axis, cell(r.axis_value), format_double(r.params.theta_rad), cell(r.interaction_used_mhz),
                      cell(r.trap_separation_um), format_double(r.params.t0_us), format_double(r.params.t_gate_us),
                      cell(r.nominal_fidelity), format_double(mean), format_double(net_room),
                      format_double(net_cryo), cell(r.t_ryd_us)});
  }
  return t;
}

CsvTable record_table(const ResultRecord& r) {
  CsvTable t;
  t.header = {"command",     "theta_rad", "omega_c_mhz",      "omega_t_mhz", "interaction_mhz", "t0_us",
              "t_gate_us",   "separation_um", "nominal_fidelity", "t_ryd_us", "e_decay_room",    "e_decay_cryo"};
  t.rows.push_back({r.command, format_double(r.params.theta_rad), format_double(r.params.omega_c_mhz),
                    format_double(r.params.omega_t_mhz), format_double(r.params.interaction_mhz),
                    format_double(r.params.t0_us), format_double(r.params.t_gate_us),
                    format_double(r.params.separation_um), cell(r.nominal_fidelity), cell(r.t_ryd_us),
                    cell(r.e_decay_room), cell(r.e_decay_cryo)});
  return t;
}

}  // namespace rydgate
