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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rydgate/fidelity.hpp"
#include "rydgate/interaction.hpp"
#include "rydgate/pulse.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

/// Trapped-atom position spread and Rydberg lifetime.
struct NoiseConfig {
  double sigma_z0 = 1.47;                  // um, along the beams
  double sigma_perp0 = 0.27;               // um, transverse
  double temperature = 10.0;               // uK
  double atom_mass = kRubidium87Mass;      // kg
  double rydberg_lifetime = 0.311;         // ms
  double trap_separation = 20.99;          // um
};

/// Throws InvalidParameter unless every field is finite and strictly positive.
void validate(const NoiseConfig& cfg);

/// Position spreads after free flight during the gate.
struct InflatedSigmas {
  double sigma_z = 0.0;        // um
  double sigma_perp = 0.0;     // um
  double flight_length = 0.0;  // l = v_rms t_g, um
  double v_rms = 0.0;          // um/us
};

/// One-axis thermal r.m.s. speed sqrt(kB T / m) in um/us.
double rms_velocity(double temperature_uk, double mass_kg);

/// sigma = sigma0 + l/2 on every axis, with l = v_rms * gate_duration.
InflatedSigmas inflate_sigmas(const NoiseConfig& cfg, double gate_duration);

/// Per-coordinate lattice {-h, -h + delta, ..., h} in units of that
/// coordinate's sigma (h = half_range). Points beyond h are dropped when
/// 2h/delta is not an integer.
struct QuadratureSpec {
  double delta = 0.1;
  double half_range = 1.5;

  std::vector<double> nodes() const;
};

struct ConvergencePoint {
  double delta = 0.0;
  double mean_fidelity = 0.0;
  std::uint64_t samples = 0;
  double wall_seconds = 0.0;

  bool operator==(const ConvergencePoint&) const = default;
};

struct FidelityReport {
  double mean_fidelity = 1.0;
  double std_error = 0.0;  // Monte Carlo only
  double decay_error = 0.0;
  double net_fidelity = 1.0;
  std::uint64_t sample_count = 0;
  std::vector<ConvergencePoint> convergence;

  /// Sets decay_error and net_fidelity = mean_fidelity - decay_error.
  void apply_decay(double e_decay);

  bool operator==(const FidelityReport&) const = default;
};

/// Gate fidelity as a function of interatomic distance for a fixed protocol.
///
/// Position fluctuations enter only through the distance, so the fidelity is
/// tabulated once on a uniform grid over [lo, hi] and interpolated with a
/// cubic B-spline. Construction checks interval midpoints against direct
/// propagation and refines the grid until they agree to 1e-8. Distances
/// outside [lo, hi] are evaluated directly.
class DistanceFidelity {
 public:
  static constexpr std::size_t kDefaultPoints = 4001;

  DistanceFidelity(GateProtocol protocol, VdwModel vdw, double lo, double hi, std::size_t points = kDefaultPoints,
                   int threads = 1);
  ~DistanceFidelity();
  DistanceFidelity(DistanceFidelity&&) noexcept;
  DistanceFidelity& operator=(DistanceFidelity&&) noexcept;

  double operator()(double dist) const;

  /// Fidelity from a full propagation at this distance.
  double direct(double dist) const;

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::size_t points() const noexcept { return points_; }
  double validation_error() const noexcept { return validation_error_; }

 private:
  struct Spline;

  GateProtocol protocol_;
  VdwModel vdw_;
  IdealGate ideal_;
  double lo_ = 0.0;
  double hi_ = 0.0;
  std::size_t points_ = 0;
  double validation_error_ = 0.0;
  std::unique_ptr<Spline> spline_;
};

/// Distance window covering `nsigma` standard deviations of every coordinate
/// difference around a trap separation L.
struct DistanceWindow {
  double lo = 0.0;
  double hi = 0.0;
};
DistanceWindow fidelity_window(const InflatedSigmas& sigmas, double trap_separation, double nsigma = 9.0);

/// Table over fidelity_window(sigmas, trap_separation).
DistanceFidelity make_distance_fidelity(const GateProtocol& protocol, const VdwModel& vdw,
                                        const InflatedSigmas& sigmas, double trap_separation,
                                        std::size_t points = DistanceFidelity::kDefaultPoints, int threads = 1);

/// Normalized Gaussian-weighted lattice average of f(distance) over the six
/// atom coordinates. The lattice is uniform, so the sum is reorganized
/// exactly over the coordinate differences (x_c - x_t etc.), which is all the
/// distance depends on. Throws InvalidParameter if a lattice point puts the
/// atoms on top of each other.
double grid_average(const std::function<double(double)>& f, const InflatedSigmas& sigmas, double trap_separation,
                    const QuadratureSpec& quad);

/// Number of six-coordinate lattice points, nodes^6.
std::uint64_t grid_sample_count(const QuadratureSpec& quad);

FidelityReport grid_average_fidelity(const DistanceFidelity& table, const InflatedSigmas& sigmas,
                                     double trap_separation, const QuadratureSpec& quad);

FidelityReport grid_average_fidelity(const GateProtocol& protocol, const VdwModel& vdw, const InflatedSigmas& sigmas,
                                     double trap_separation, const QuadratureSpec& quad);

/// Runs every delta and fills the convergence series; mean_fidelity is the
/// linear extrapolation of the series to delta -> 0 (the single value when
/// only one delta is given), clamped to [0, 1].
FidelityReport grid_convergence(const DistanceFidelity& table, const InflatedSigmas& sigmas, double trap_separation,
                                std::span<const double> deltas, double half_range = 1.5);

/// Least-squares line through (delta, mean_fidelity) evaluated at delta = 0.
double extrapolate_to_zero_step(std::span<const ConvergencePoint> series);

struct MonteCarloSpec {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20211;
  std::optional<double> truncation;  // |z| <= truncation sigma per coordinate
  int threads = 1;
};

/// Mean and standard error of the fidelity over independent Gaussian atom
/// positions. Samples are drawn in fixed-size chunks with per-chunk seeds, so
/// the result is bit-identical for a given seed whatever the thread count.
/// Throws InvalidParameter for fewer than 1000 samples.
FidelityReport monte_carlo_average_fidelity(const DistanceFidelity& table, const InflatedSigmas& sigmas,
                                            double trap_separation, const MonteCarloSpec& spec);

FidelityReport monte_carlo_average_fidelity(const GateProtocol& protocol, const VdwModel& vdw,
                                            const InflatedSigmas& sigmas, double trap_separation,
                                            const MonteCarloSpec& spec);

/// E_decay = T_Ryd / tau.
double decay_error(const GateProtocol& protocol, const NoiseConfig& cfg);

/// Same, from a precomputed T_Ryd (us) and a lifetime in ms.
double decay_error_from_exposure(double t_ryd, double lifetime_ms);

}  // namespace rydgate
