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

#include "rydgate/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rydgate/error.hpp"
#include "rydgate/exposure.hpp"

namespace rydgate {

namespace {

using nlohmann::json;

struct Setup {
  ProtocolParams params;
  GateProtocol protocol;
  VdwModel vdw;
};

Setup setup(const RunConfig& c) {
  Setup s;
  s.vdw = vdw_model(c);
  s.params = protocol_params(c);
  s.protocol = build_protocol(c, s.params);
  return s;
}

ResultRecord new_record(const std::string& command, const RunConfig& c, const ProtocolParams& p) {
  ResultRecord r;
  r.command = command;
  r.config = config_to_json(c);
  r.run_id = make_run_id(command, r.config);
  r.timestamp = utc_timestamp();
  r.params = solved_params(p);
  return r;
}

double exposure_at(const RunConfig& c, const GateProtocol& protocol, double interaction) {
  double shortest = std::numeric_limits<double>::infinity();
  for (const PulseSpec& p : protocol.pulses) shortest = std::min(shortest, p.duration);
  const auto inputs = computational_basis_states();
  return rydberg_exposure(inputs, protocol, shortest / c.exposure_steps_per_pulse, interaction);
}

void fill_decay(ResultRecord& r, const RunConfig& c, double t_ryd) {
  r.t_ryd_us = t_ryd;
  r.e_decay_room = decay_error_from_exposure(t_ryd, c.noise.lifetime_room_ms);
  r.e_decay_cryo = decay_error_from_exposure(t_ryd, c.noise.lifetime_cryo_ms);
}

double configured_separation(const RunConfig& c, const ProtocolParams& p) {
  return c.trap_separation_um.value_or(p.separation);
}

// Lattice average at one delta plus decay, used by sweep rows.
void fill_sweep_row(ResultRecord& r, const RunConfig& c, const Setup& s, double separation, double temperature_uk) {
  const double v = vdw_interaction(s.vdw, separation);
  r.trap_separation_um = separation;
  r.interaction_used_mhz = mhz_from_angular(v);
  r.nominal_fidelity =
      pedersen_fidelity(extract_gate_matrix(s.protocol, v), IdealGate::for_target(s.protocol.target));
  fill_decay(r, c, exposure_at(c, s.protocol, v));

  NoiseConfig n = noise_config(c, separation, c.noise.lifetime_room_ms);
  n.temperature = temperature_uk;
  const InflatedSigmas sigmas = inflate_sigmas(n, s.params.t_gate);
  const DistanceFidelity table = make_distance_fidelity(s.protocol, s.vdw, sigmas, separation,
                                                        c.sampling.table_points, c.sampling.threads);
  FidelityReport g = grid_average_fidelity(table, sigmas, separation, {c.sweep.delta, c.sampling.half_range_sigma});
  g.apply_decay(*r.e_decay_room);
  r.grid = g;
}

}  // namespace

ResultRecord cmd_solve(const RunConfig& c) {
  const ProtocolParams p = protocol_params(c);
  ResultRecord r = new_record("solve", c, p);
  r.trap_separation_um = configured_separation(c, p);
  r.interaction_used_mhz = mhz_from_angular(p.interaction);
  return r;
}

ResultRecord cmd_simulate(const RunConfig& c) {
  const Setup s = setup(c);
  ResultRecord r = new_record("simulate", c, s.params);
  double v = s.params.interaction;
  if (c.interaction_override_mhz) {
    v = angular_from_mhz(*c.interaction_override_mhz);
  } else if (c.trap_separation_um) {
    v = vdw_interaction(s.vdw, *c.trap_separation_um);
  }
  r.interaction_used_mhz = mhz_from_angular(v);
  r.trap_separation_um = configured_separation(c, s.params);
  const GateMatrix g = extract_gate_matrix(s.protocol, v);
  r.gate_matrix = g.m;
  r.nominal_fidelity = pedersen_fidelity(g, IdealGate::for_target(s.protocol.target));
  fill_decay(r, c, exposure_at(c, s.protocol, v));
  return r;
}

ResultRecord cmd_fidelity(const RunConfig& c) {
  const Setup s = setup(c);
  ResultRecord r = new_record("fidelity", c, s.params);
  const double separation = configured_separation(c, s.params);
  r.trap_separation_um = separation;
  r.interaction_used_mhz = mhz_from_angular(s.params.interaction);
  fill_decay(r, c, exposure_at(c, s.protocol, s.params.interaction));

  const InflatedSigmas sigmas =
      inflate_sigmas(noise_config(c, separation, c.noise.lifetime_room_ms), s.params.t_gate);
  const DistanceFidelity table = make_distance_fidelity(s.protocol, s.vdw, sigmas, separation,
                                                        c.sampling.table_points, c.sampling.threads);

  if (c.sampling.mode != SamplingMode::mc) {
    FidelityReport g = grid_convergence(table, sigmas, separation, c.sampling.deltas, c.sampling.half_range_sigma);
    g.apply_decay(*r.e_decay_room);
    r.grid = g;
  }
  if (c.sampling.mode != SamplingMode::grid) {
    MonteCarloSpec spec;
    spec.samples = c.sampling.mc_samples;
    spec.seed = c.sampling.seed;
    spec.truncation = c.sampling.mc_truncation_sigma;
    spec.threads = c.sampling.threads;
    const auto start = std::chrono::steady_clock::now();
    FidelityReport m = monte_carlo_average_fidelity(table, sigmas, separation, spec);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    m.convergence.push_back({0.0, m.mean_fidelity, m.sample_count, wall});
    m.apply_decay(*r.e_decay_room);
    r.monte_carlo = m;
  }
  return r;
}

std::vector<ResultRecord> cmd_sweep(const RunConfig& c) {
  if (c.sweep.values.size() < 2) throw ConfigError("sweep.values", "a sweep needs at least 2 points");
  std::vector<ResultRecord> rows;
  const Setup base = setup(c);
  for (double value : c.sweep.values) {
    switch (c.sweep.axis) {
      case SweepAxis::separation: {
        ResultRecord r = new_record("sweep", c, base.params);
        fill_sweep_row(r, c, base, value, c.noise.temperature_uk);
        r.axis_value = value;
        rows.push_back(std::move(r));
        break;
      }
      case SweepAxis::omega: {
        RunConfig cv = c;
        cv.omega_c_mhz = value;
        cv.omega_t_mhz = value;
        const Setup s = setup(cv);
        ResultRecord r = new_record("sweep", c, s.params);
        fill_sweep_row(r, cv, s, s.params.separation, c.noise.temperature_uk);
        r.axis_value = value;
        rows.push_back(std::move(r));
        break;
      }
      case SweepAxis::temperature: {
        ResultRecord r = new_record("sweep", c, base.params);
        fill_sweep_row(r, c, base, configured_separation(c, base.params), value);
        r.axis_value = value;
        rows.push_back(std::move(r));
        break;
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> parse_range(const std::string& spec) {
  // start:stop:count
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw ConfigError("--range", "expected start:stop:count");
  double start = 0.0, stop = 0.0;
  long count = 0;
  try {
    start = std::stod(parts[0]);
    stop = std::stod(parts[1]);
    count = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw ConfigError("--range", "expected start:stop:count");
  }
  if (count < 2) throw ConfigError("--range", "a sweep needs at least 2 points");
  std::vector<double> values;
  for (long i = 0; i < count; ++i) values.push_back(start + (stop - start) * static_cast<double>(i) / (count - 1));
  std::sort(values.begin(), values.end());
  return values;
}

void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path);
  if (!f) throw ConfigError("--out", "cannot write " + *path);
  f << text;
}

std::string render_csv(const CsvTable& t) {
  std::ostringstream s;
  write_csv(s, t);
  return s.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-step Rydberg CZ(theta)/CNOT gate simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_path;
  std::string format;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string axis;
  std::string range;
  std::vector<double> values;

  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "Output file (default: stdout)");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed override");
  auto* threads_opt = app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* solve = app.add_subcommand("solve", "Solve V, t0, t_gate and separation");
  auto* simulate = app.add_subcommand("simulate", "Simulate the gate at one interaction");
  auto* fidelity = app.add_subcommand("fidelity", "Average fidelity over position fluctuations");
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter");
  sweep->add_option("--axis", axis, "separation | omega | temperature")
      ->check(CLI::IsMember({"separation", "omega", "temperature"}));
  sweep->add_option("--range", range, "start:stop:count");
  sweep->add_option("--values", values, "Explicit axis values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (*seed_opt) c.sampling.seed = seed;
    if (*threads_opt) c.sampling.threads = threads;
    if (!axis.empty()) c.sweep.axis = config_from_json({{"sweep", {{"axis", axis}}}}).sweep.axis;
    if (!range.empty() && !values.empty()) throw ConfigError("--range", "give either --range or --values");
    if (!range.empty()) c.sweep.values = parse_range(range);
    if (!values.empty()) {
      std::sort(values.begin(), values.end());
      c.sweep.values = values;
    }

    std::optional<std::string> path = c.output.path;
    if (!out_path.empty()) path = out_path;
    std::string fmt = format.empty() ? c.output.format.value_or("") : format;

    std::string text;
    if (*solve || *simulate) {
      const ResultRecord r = *solve ? cmd_solve(c) : cmd_simulate(c);
      text = fmt == "csv" ? render_csv(record_table(r)) : record_to_json(r).dump(2) + "\n";
    } else if (*fidelity) {
      const ResultRecord r = cmd_fidelity(c);
      text = fmt == "json" ? record_to_json(r).dump(2) + "\n" : render_csv(fidelity_table(r));
    } else if (*sweep) {
      const std::vector<ResultRecord> rows = cmd_sweep(c);
      if (fmt == "json") {
        json arr = json::array();
        for (const ResultRecord& r : rows) arr.push_back(record_to_json(r));
        text = arr.dump(2) + "\n";
      } else {
        text = render_csv(sweep_table(to_string(c.sweep.axis), rows));
      }
    }
    emit(text, path, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace rydgate
