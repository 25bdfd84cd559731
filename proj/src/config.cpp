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

#include "rydgate/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "rydgate/error.hpp"

namespace rydgate {

using nlohmann::json;

namespace {

// Reads one JSON object, tracking which keys were consumed so that typos
// surface as errors instead of silently falling back to defaults.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  double number(const std::string& key, double def) {
    const json* v = find(key);
    if (!v) return def;
    return as_number(*v, field(key));
  }

  double positive(const std::string& key, double def) {
    const double x = number(key, def);
    if (!(x > 0.0)) throw ConfigError(field(key), "must be positive");
    return x;
  }

  std::optional<double> optional_number(const std::string& key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    return as_number(*v, field(key));
  }

  std::uint64_t count(const std::string& key, std::uint64_t def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0)) {
      throw ConfigError(field(key), "expected a non-negative integer");
    }
    return v->get<std::uint64_t>();
  }

  std::string string(const std::string& key, const std::string& def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_string()) throw ConfigError(field(key), "expected a string");
    return v->get<std::string>();
  }

  std::optional<std::string> optional_string(const std::string& key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) throw ConfigError(field(key), "expected a string");
    return v->get<std::string>();
  }

  std::vector<double> numbers(const std::string& key, std::vector<double> def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_array()) throw ConfigError(field(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      out.push_back(as_number((*v)[i], field(key) + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  const json* object(const std::string& key) { return find(key); }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(field(it.key()), "unknown field");
    }
  }

 private:
  static double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigError(where, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(where, "must be finite");
    return x;
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename Enum, std::size_t N>
Enum parse_enum(const std::string& value, const std::string& where, const std::pair<const char*, Enum> (&table)[N]) {
  for (const auto& [name, e] : table) {
    if (value == name) return e;
  }
  std::string allowed;
  for (const auto& entry : table) allowed += (allowed.empty() ? "" : ", ") + std::string(entry.first);
  throw ConfigError(where, "must be one of {" + allowed + "}, got \"" + value + "\"");
}

constexpr std::pair<const char*, GateKind> kGates[] = {{"cz", GateKind::cz}, {"cnot", GateKind::cnot}};
constexpr std::pair<const char*, SamplingMode> kModes[] = {
    {"grid", SamplingMode::grid}, {"mc", SamplingMode::mc}, {"both", SamplingMode::both}};
constexpr std::pair<const char*, SweepAxis> kAxes[] = {
    {"separation", SweepAxis::separation}, {"omega", SweepAxis::omega}, {"temperature", SweepAxis::temperature}};

std::vector<double> sweep_values(ObjectReader& r) {
  std::vector<double> values = r.numbers("values", {});
  const auto start = r.optional_number("start");
  const auto stop = r.optional_number("stop");
  const std::uint64_t count = r.count("count", 0);
  const bool ranged = start || stop || count;
  if (ranged && !values.empty()) {
    throw ConfigError(r.field("values"), "give either values or start/stop/count, not both");
  }
  if (ranged) {
    if (!start || !stop) throw ConfigError(r.field(start ? "stop" : "start"), "required with count");
    if (count < 2) throw ConfigError(r.field("count"), "a sweep needs at least 2 points");
    for (std::uint64_t i = 0; i < count; ++i) {
      values.push_back(*start + (*stop - *start) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

std::string to_string(GateKind g) { return g == GateKind::cz ? "cz" : "cnot"; }

std::string to_string(SamplingMode m) {
  switch (m) {
    case SamplingMode::grid: return "grid";
    case SamplingMode::mc: return "mc";
    case SamplingMode::both: return "both";
  }
  return "grid";
}

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::separation: return "separation";
    case SweepAxis::omega: return "omega";
    case SweepAxis::temperature: return "temperature";
  }
  return "separation";
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  ObjectReader root(j, "");
  c.gate = parse_enum(root.string("gate", "cz"), "gate", kGates);
  const json* theta = root.find("theta_rad");
  if (theta) {
    c.theta_rad = root.number("theta_rad", kPi);
    if (!(c.theta_rad > 0.0 && c.theta_rad < kTwoPi)) throw ConfigError("theta_rad", "must lie in (0, 2pi)");
  }
  if (c.gate == GateKind::cnot && c.theta_rad != kPi) {
    throw ConfigError("theta_rad", "the CNOT protocol only exists for theta = pi");
  }
  c.omega_c_mhz = root.positive("omega_c_mhz", c.omega_c_mhz);
  c.omega_t_mhz = root.positive("omega_t_mhz", c.omega_t_mhz);
  c.c6_thz_um6 = root.positive("c6_thz_um6", c.c6_thz_um6);
  c.interaction_override_mhz = root.optional_number("interaction_override_mhz");
  if (c.interaction_override_mhz && *c.interaction_override_mhz < 0.0) {
    throw ConfigError("interaction_override_mhz", "must be non-negative");
  }
  c.trap_separation_um = root.optional_number("trap_separation_um");
  if (c.trap_separation_um && !(*c.trap_separation_um > 0.0)) {
    throw ConfigError("trap_separation_um", "must be positive");
  }

  if (const json* n = root.object("noise")) {
    ObjectReader r(*n, "noise");
    c.noise.sigma_z0_um = r.positive("sigma_z0_um", c.noise.sigma_z0_um);
    c.noise.sigma_perp0_um = r.positive("sigma_perp0_um", c.noise.sigma_perp0_um);
    c.noise.temperature_uk = r.positive("temperature_uk", c.noise.temperature_uk);
    c.noise.atom_mass_amu = r.positive("atom_mass_amu", c.noise.atom_mass_amu);
    c.noise.lifetime_room_ms = r.positive("lifetime_room_ms", c.noise.lifetime_room_ms);
    c.noise.lifetime_cryo_ms = r.positive("lifetime_cryo_ms", c.noise.lifetime_cryo_ms);
    r.finish();
  }

  if (const json* s = root.object("sampling")) {
    ObjectReader r(*s, "sampling");
    c.sampling.mode = parse_enum(r.string("mode", "grid"), "sampling.mode", kModes);
    c.sampling.deltas = r.numbers("deltas", c.sampling.deltas);
    c.sampling.half_range_sigma = r.positive("half_range_sigma", c.sampling.half_range_sigma);
    c.sampling.mc_samples = r.count("mc_samples", c.sampling.mc_samples);
    c.sampling.mc_truncation_sigma = r.optional_number("mc_truncation_sigma");
    c.sampling.seed = r.count("seed", c.sampling.seed);
    c.sampling.table_points = r.count("table_points", c.sampling.table_points);
    c.sampling.threads = static_cast<int>(r.count("threads", static_cast<std::uint64_t>(c.sampling.threads)));
    r.finish();
  }
  if (c.sampling.deltas.empty()) throw ConfigError("sampling.deltas", "must not be empty");
  for (std::size_t i = 0; i < c.sampling.deltas.size(); ++i) {
    const double d = c.sampling.deltas[i];
    if (!(d > 0.0 && d <= 1.5)) {
      throw ConfigError("sampling.deltas[" + std::to_string(i) + "]", "must lie in (0, 1.5]");
    }
  }
  if (c.sampling.mc_samples < 1000) throw ConfigError("sampling.mc_samples", "must be at least 1000");
  if (c.sampling.mc_truncation_sigma && !(*c.sampling.mc_truncation_sigma > 0.0)) {
    throw ConfigError("sampling.mc_truncation_sigma", "must be positive");
  }
  if (c.sampling.table_points < 4) throw ConfigError("sampling.table_points", "must be at least 4");
  if (c.sampling.threads < 1) throw ConfigError("sampling.threads", "must be at least 1");

  const std::uint64_t steps = root.count("exposure_steps_per_pulse", c.exposure_steps_per_pulse);
  if (steps < 2 || steps > 10'000'000) throw ConfigError("exposure_steps_per_pulse", "must lie in [2, 1e7]");
  c.exposure_steps_per_pulse = static_cast<int>(steps);

  if (const json* s = root.object("sweep")) {
    ObjectReader r(*s, "sweep");
    c.sweep.axis = parse_enum(r.string("axis", "separation"), "sweep.axis", kAxes);
    c.sweep.values = sweep_values(r);
    c.sweep.delta = r.positive("delta", c.sweep.delta);
    if (c.sweep.delta > 1.5) throw ConfigError("sweep.delta", "must lie in (0, 1.5]");
    for (std::size_t i = 0; i < c.sweep.values.size(); ++i) {
      if (!(c.sweep.values[i] > 0.0)) {
        throw ConfigError("sweep.values[" + std::to_string(i) + "]", "axis values must be positive");
      }
    }
    r.finish();
  }

  if (const json* o = root.object("output")) {
    ObjectReader r(*o, "output");
    c.output.path = r.optional_string("path");
    c.output.format = r.optional_string("format");
    if (c.output.format && *c.output.format != "csv" && *c.output.format != "json") {
      throw ConfigError("output.format", "must be one of {csv, json}");
    }
    r.finish();
  }

  root.finish();
  return c;
}

json config_to_json(const RunConfig& c) {
  auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
  json j;
  j["gate"] = to_string(c.gate);
  j["theta_rad"] = c.theta_rad;
  j["omega_c_mhz"] = c.omega_c_mhz;
  j["omega_t_mhz"] = c.omega_t_mhz;
  j["c6_thz_um6"] = c.c6_thz_um6;
  j["interaction_override_mhz"] = opt(c.interaction_override_mhz);
  j["trap_separation_um"] = opt(c.trap_separation_um);
  j["noise"] = {{"sigma_z0_um", c.noise.sigma_z0_um},
                {"sigma_perp0_um", c.noise.sigma_perp0_um},
                {"temperature_uk", c.noise.temperature_uk},
                {"atom_mass_amu", c.noise.atom_mass_amu},
                {"lifetime_room_ms", c.noise.lifetime_room_ms},
                {"lifetime_cryo_ms", c.noise.lifetime_cryo_ms}};
  j["sampling"] = {{"mode", to_string(c.sampling.mode)},
                   {"deltas", c.sampling.deltas},
                   {"half_range_sigma", c.sampling.half_range_sigma},
                   {"mc_samples", c.sampling.mc_samples},
                   {"mc_truncation_sigma", opt(c.sampling.mc_truncation_sigma)},
                   {"seed", c.sampling.seed},
                   {"table_points", c.sampling.table_points},
                   {"threads", c.sampling.threads}};
  j["exposure_steps_per_pulse"] = c.exposure_steps_per_pulse;
  j["sweep"] = {{"axis", to_string(c.sweep.axis)}, {"values", c.sweep.values}, {"delta", c.sweep.delta}};
  j["output"] = {{"path", opt(c.output.path)}, {"format", opt(c.output.format)}};
  return j;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

VdwModel vdw_model(const RunConfig& c) { return {kTwoPi * c.c6_thz_um6 * 1e6}; }

ProtocolParams protocol_params(const RunConfig& c) {
  try {
    return design_protocol(angular_from_mhz(c.omega_c_mhz), angular_from_mhz(c.omega_t_mhz), c.theta_rad,
                           vdw_model(c));
  } catch (const InvalidParameter& e) {
    throw ConfigError("theta_rad", e.what());
  }
}

GateProtocol build_protocol(const RunConfig& c, const ProtocolParams& p) {
  return c.gate == GateKind::cnot ? build_cnot_protocol(p) : build_cz_protocol(p);
}

NoiseConfig noise_config(const RunConfig& c, double trap_separation, double lifetime_ms) {
  NoiseConfig n;
  n.sigma_z0 = c.noise.sigma_z0_um;
  n.sigma_perp0 = c.noise.sigma_perp0_um;
  n.temperature = c.noise.temperature_uk;
  n.atom_mass = c.noise.atom_mass_amu * kAtomicMassUnit;
  n.rydberg_lifetime = lifetime_ms;
  n.trap_separation = trap_separation;
  return n;
}

}  // namespace rydgate
