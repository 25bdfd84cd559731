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

// End-to-end checks of the published figures. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rydgate/exposure.hpp"
#include "rydgate/fidelity.hpp"
#include "rydgate/noise.hpp"
#include "rydgate/protocol.hpp"

using namespace rydgate;

namespace {

const double kOmega = angular_from_mhz(0.8);

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double max_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > max_seconds) {
    o.pass = false;
    o.detail += " [over time budget]";
  }
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %-34s %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

bool within(double x, double target, double tol) { return std::abs(x - target) <= tol; }

}  // namespace

int main() {
  const ProtocolParams design = design_protocol(kOmega, kOmega, kPi);
  const GateProtocol cz = build_cz_protocol(design);

  criterion(1, "detuned-cycle phase law", 1.0, [] {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.05, 50.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double w = u(rng);
      const double v = u(rng);
      const std::vector<Drive> d = {{Atom::target, Level::g1, Level::ryd, w}};
      const double wbar = std::hypot(w, v);
      const Complex a = exponentiate(build_hamiltonian(d, v), 2.0 * kPi / wbar).unitary(7, 7);
      worst = std::max(worst, std::abs(oracle::angle_diff(std::arg(a), -kPi * (1.0 + v / wbar))));
    }
    return Outcome{worst < 1e-9, fmt("max phase error %.2e", worst)};
  });

  criterion(2, "nominal CZ(theta) matrices", 1.0, [] {
    double worst = 0.0;
    for (double theta : {0.5 * kPi, kPi, 1.5 * kPi}) {
      const GateMatrix m = extract_gate_matrix(build_cz_protocol(design_protocol(kOmega, kOmega, theta)));
      worst = std::max(worst, (m.m - IdealGate::controlled_phase(theta).u).cwiseAbs().maxCoeff());
    }
    return Outcome{worst < 1e-9, fmt("max deviation %.2e", worst)};
  });

  criterion(3, "nominal CNOT fidelity", 1.0, [&] {
    const GateProtocol g = build_cnot_protocol(design);
    const double ratio = design.omega_t / design.interaction;
    const double f = pedersen_fidelity(extract_gate_matrix(g), IdealGate::cnot());
    return Outcome{f >= 1.0 - 1e-9 && within(ratio, std::sqrt(3.0), 1e-12),
                   fmt("1 - F = %.2e, omega_t/V = %.12f", 1.0 - f, ratio)};
  });

  criterion(4, "parameter chain", 1e9, [&] {
    const double fast = angular_from_mhz(4.6);
    const double tg_fast = gate_duration(design_protocol(fast, fast, kPi));
    const bool ok = within(design.separation, 20.99, 0.01) && within(design.t_gate, 3.42, 0.02) &&
                    within(tg_fast, 0.594, 0.005);
    return Outcome{ok, fmt("L = %.4f um, t_g = %.4f us, t_g(4.6 MHz) = %.4f us", design.separation, design.t_gate,
                           tg_fast)};
  });

  criterion(5, "decay budget", 1e9, [&] {
    const double t_ryd = rydberg_exposure(cz);
    const double ratio = t_ryd / (2.0 * kPi / design.omega_c);
    const double room = decay_error_from_exposure(t_ryd, 0.311);
    const double cryo = decay_error_from_exposure(t_ryd, 1.10);
    const bool ok = within(t_ryd, 1.91, 0.02) && within(ratio, 1.52, 0.02) && within(room, 6.14e-3, 0.02 * 6.14e-3) &&
                    within(cryo, 1.74e-3, 0.02 * 1.74e-3);
    std::ostringstream s;
    s << "T_Ryd = " << t_ryd << " us, ratio = " << ratio << ", E = " << room << " / " << cryo;
    return Outcome{ok, s.str()};
  });

  NoiseConfig noise;
  noise.trap_separation = design.separation;
  const InflatedSigmas sigmas = inflate_sigmas(noise, design.t_gate);

  criterion(6, "sigma inflation", 1e9, [&] {
    const bool ok = within(sigmas.sigma_z, 1.52, 0.01) && within(sigmas.sigma_perp, 0.32, 0.01);
    return Outcome{ok, fmt("sigma_z = %.4f um, sigma_perp = %.4f um", sigmas.sigma_z, sigmas.sigma_perp)};
  });

  std::optional<DistanceFidelity> table;
  double grid_at_finest = 0.0;

  criterion(7, "grid-averaged fidelity", 120.0, [&] {
    table.emplace(make_distance_fidelity(cz, VdwModel{}, sigmas, design.separation));
    const std::array<double, 5> deltas = {0.25, 0.2, 0.15, 0.12, 0.1};
    const std::array<double, 5> reported = {0.9910, 0.9912, 0.9914, 0.9920, 0.9920};
    FidelityReport r = grid_convergence(*table, sigmas, design.separation, deltas);
    bool ok = true;
    std::ostringstream s;
    s << "F =";
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const double f = r.convergence[i].mean_fidelity;
      ok = ok && within(f, reported[i], 1e-3);
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.5f", f);
      s << buf;
    }
    grid_at_finest = r.convergence.back().mean_fidelity;
    const double t_ryd = rydberg_exposure(cz);
    const double net_room = r.mean_fidelity - decay_error_from_exposure(t_ryd, 0.311);
    const double net_cryo = r.mean_fidelity - decay_error_from_exposure(t_ryd, 1.10);
    ok = ok && within(r.mean_fidelity, 0.992, 1e-3) && within(net_room, 0.986, 1e-3) && within(net_cryo, 0.990, 1e-3);
    char buf[128];
    std::snprintf(buf, sizeof buf, "; estimate %.5f; net %.5f / %.5f", r.mean_fidelity, net_room, net_cryo);
    s << buf;
    return Outcome{ok, s.str()};
  });

  criterion(8, "propagator vs RK4", 1e9, [&] {
    double worst = 0.0;
    for (const PulseSpec& p : cz.pulses) {
      const Hamiltonian h = pulse_hamiltonian(p, design.interaction);
      const Operator exact = exponentiate(h, p.duration).unitary;
      worst = std::max(worst, (exact - oracle::rk4_propagator(h.matrix(), p.duration, 1e-4)).cwiseAbs().maxCoeff());
    }
    return Outcome{worst < 1e-6, fmt("max deviation %.2e", worst)};
  });

  criterion(9, "channel exactness", 1e9, [&] {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double v = design.interaction * std::pow(10.0, -2.0 + 4.0 * k / 19.0);
      const Matrix4 m = extract_gate_matrix(cz, v).m;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          if (i != j) worst = std::max(worst, std::abs(m(i, j)));
        }
      }
      for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(m(i, i) - 1.0));
    }
    return Outcome{worst < 1e-10, fmt("max deviation %.2e", worst)};
  });

  criterion(10, "truncated MC vs grid", 1e9, [&] {
    if (!table) table.emplace(make_distance_fidelity(cz, VdwModel{}, sigmas, design.separation));
    if (grid_at_finest == 0.0) {
      grid_at_finest = grid_average_fidelity(*table, sigmas, design.separation, {0.1, 1.5}).mean_fidelity;
    }
    MonteCarloSpec spec;
    spec.samples = 1'000'000;
    spec.truncation = 1.5;
    spec.threads = 4;
    const FidelityReport mc = monte_carlo_average_fidelity(*table, sigmas, design.separation, spec);
    const double tol = std::max(3.0 * mc.std_error, 1e-3);
    const double diff = std::abs(mc.mean_fidelity - grid_at_finest);
    return Outcome{diff <= tol, fmt("MC %.5f vs grid %.5f, |diff| %.2e", mc.mean_fidelity, grid_at_finest, diff)};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
