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

#include "rydgate/noise.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "rydgate/error.hpp"
#include "rydgate/exposure.hpp"

namespace rydgate {

namespace {

constexpr double kTableTolerance = 1e-8;
constexpr std::size_t kMaxTablePoints = 64001;
constexpr std::size_t kValidationProbes = 256;
constexpr std::uint64_t kMonteCarloChunk = 1 << 14;

// Runs body(begin, end) over [0, n) split into contiguous blocks.
template <typename Body>
void parallel_blocks(std::size_t n, int threads, Body&& body) {
  const std::size_t workers = std::clamp<std::size_t>(threads < 1 ? 1 : threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(n, begin + block);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate(const NoiseConfig& cfg) {
  if (!positive(cfg.sigma_z0) || !positive(cfg.sigma_perp0)) {
    throw InvalidParameter("trap position spreads must be positive");
  }
  if (!positive(cfg.temperature)) throw InvalidParameter("atom temperature must be positive");
  if (!positive(cfg.atom_mass)) throw InvalidParameter("atom mass must be positive");
  if (!positive(cfg.rydberg_lifetime)) throw InvalidParameter("Rydberg lifetime must be positive");
  if (!positive(cfg.trap_separation)) throw InvalidParameter("trap separation must be positive");
}

double rms_velocity(double temperature_uk, double mass_kg) {
  // 1 m/s == 1 um/us.
  return std::sqrt(kBoltzmann * temperature_uk * 1e-6 / mass_kg);
}

InflatedSigmas inflate_sigmas(const NoiseConfig& cfg, double gate_duration) {
  validate(cfg);
  if (!std::isfinite(gate_duration) || gate_duration < 0.0) {
    throw InvalidParameter("gate duration must be non-negative");
  }
  InflatedSigmas s;
  s.v_rms = rms_velocity(cfg.temperature, cfg.atom_mass);
  s.flight_length = s.v_rms * gate_duration;
  s.sigma_z = cfg.sigma_z0 + 0.5 * s.flight_length;
  s.sigma_perp = cfg.sigma_perp0 + 0.5 * s.flight_length;
  return s;
}

std::vector<double> QuadratureSpec::nodes() const {
  if (!(delta > 0.0) || delta > 1.5 || !positive(half_range)) {
    throw InvalidParameter("quadrature step must lie in (0, 1.5] and the range must be positive");
  }
  const auto intervals = static_cast<std::size_t>(std::floor(2.0 * half_range / delta + 1e-9));
  std::vector<double> out(intervals + 1);
  for (std::size_t k = 0; k <= intervals; ++k) {
    out[k] = -half_range + static_cast<double>(k) * delta;
  }
  return out;
}

void FidelityReport::apply_decay(double e_decay) {
  decay_error = e_decay;
  net_fidelity = mean_fidelity - e_decay;
}

// ---------------------------------------------------------------------------
// DistanceFidelity

struct DistanceFidelity::Spline {
  boost::math::interpolators::cardinal_cubic_b_spline<double> f;
};

DistanceFidelity::DistanceFidelity(GateProtocol protocol, VdwModel vdw, double lo, double hi, std::size_t points,
                                   int threads)
    : protocol_(std::move(protocol)), vdw_(vdw), ideal_(IdealGate::for_target(protocol_.target)), lo_(lo), hi_(hi) {
  validate(protocol_);
  if (!positive(lo) || !(hi > lo) || !std::isfinite(hi)) {
    throw InvalidParameter("fidelity table needs 0 < lo < hi");
  }
  if (points < 4) {
    throw InvalidParameter("fidelity table needs at least 4 points");
  }

  for (;;) {
    const double step = (hi_ - lo_) / static_cast<double>(points - 1);
    std::vector<double> values(points);
    parallel_blocks(points, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) values[i] = direct(lo_ + static_cast<double>(i) * step);
    });
    auto spline = std::make_unique<Spline>(Spline{{values.data(), values.size(), lo_, step}});

    const std::size_t stride = std::max<std::size_t>(1, (points - 1) / kValidationProbes);
    std::vector<std::size_t> probes;
    for (std::size_t i = 0; i + 1 < points; i += stride) probes.push_back(i);
    probes.push_back(points - 2);
    std::vector<double> errors(probes.size());
    parallel_blocks(probes.size(), threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const double mid = lo_ + (static_cast<double>(probes[k]) + 0.5) * step;
        errors[k] = std::abs(spline->f(mid) - direct(mid));
      }
    });
    const double err = *std::max_element(errors.begin(), errors.end());

    if (err <= kTableTolerance || 2 * (points - 1) + 1 > kMaxTablePoints) {
      if (err > kTableTolerance) {
        throw NumericError("fidelity table could not reach 1e-8 interpolation accuracy");
      }
      points_ = points;
      validation_error_ = err;
      spline_ = std::move(spline);
      return;
    }
    points = 2 * (points - 1) + 1;
  }
}

DistanceFidelity::~DistanceFidelity() = default;
DistanceFidelity::DistanceFidelity(DistanceFidelity&&) noexcept = default;
DistanceFidelity& DistanceFidelity::operator=(DistanceFidelity&&) noexcept = default;

double DistanceFidelity::operator()(double dist) const {
  if (dist >= lo_ && dist <= hi_) return spline_->f(dist);
  return direct(dist);
}

double DistanceFidelity::direct(double dist) const {
  return pedersen_fidelity(extract_gate_matrix(protocol_, vdw_interaction(vdw_, dist)), ideal_);
}

DistanceWindow fidelity_window(const InflatedSigmas& sigmas, double trap_separation, double nsigma) {
  if (!positive(trap_separation)) throw InvalidParameter("trap separation must be positive");
  // Each coordinate difference has spread sqrt(2) sigma.
  const double dx = nsigma * std::sqrt(2.0) * sigmas.sigma_perp;
  const double dz = nsigma * std::sqrt(2.0) * sigmas.sigma_z;
  const double min_half_width = 1e-3 * trap_separation;
  double lo = std::max(trap_separation - dx, 0.5 * trap_separation);
  double hi = std::sqrt(std::pow(trap_separation + dx, 2) + dx * dx + dz * dz);
  lo = std::min(lo, trap_separation - min_half_width);
  hi = std::max(hi, trap_separation + min_half_width);
  return {lo, hi};
}

DistanceFidelity make_distance_fidelity(const GateProtocol& protocol, const VdwModel& vdw,
                                        const InflatedSigmas& sigmas, double trap_separation, std::size_t points,
                                        int threads) {
  const DistanceWindow w = fidelity_window(sigmas, trap_separation);
  return DistanceFidelity(protocol, vdw, w.lo, w.hi, points, threads);
}

// ---------------------------------------------------------------------------
// Lattice quadrature

namespace {

// Weights of x_c - x_t = m * delta * sigma for m in [-(n-1), n-1], index m + n - 1.
std::vector<double> difference_weights(const std::vector<double>& nodes) {
  const std::size_t n = nodes.size();
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = std::exp(-0.5 * nodes[k] * nodes[k]);
  std::vector<double> diff(2 * n - 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) diff[i + (n - 1) - j] += w[i] * w[j];
  }
  return diff;
}

}  // namespace

std::uint64_t grid_sample_count(const QuadratureSpec& quad) {
  const std::uint64_t n = quad.nodes().size();
  return n * n * n * n * n * n;
}

double grid_average(const std::function<double(double)>& f, const InflatedSigmas& sigmas, double trap_separation,
                    const QuadratureSpec& quad) {
  if (!positive(trap_separation)) throw InvalidParameter("trap separation must be positive");
  if (!(sigmas.sigma_z >= 0.0) || !(sigmas.sigma_perp >= 0.0)) {
    throw InvalidParameter("position spreads must be non-negative");
  }
  const std::vector<double> nodes = quad.nodes();
  const std::vector<double> weights = difference_weights(nodes);
  const auto n = static_cast<long>(nodes.size());
  const double step_perp = quad.delta * sigmas.sigma_perp;
  const double step_z = quad.delta * sigmas.sigma_z;

  double total = 0.0;
  double norm = 0.0;
  for (long a = -(n - 1); a <= n - 1; ++a) {
    const double wa = weights[a + n - 1];
    const double x = static_cast<double>(a) * step_perp - trap_separation;
    for (long b = -(n - 1); b <= n - 1; ++b) {
      const double wab = wa * weights[b + n - 1];
      const double y = static_cast<double>(b) * step_perp;
      double row = 0.0;
      double row_norm = 0.0;
      for (long c = -(n - 1); c <= n - 1; ++c) {
        const double w = wab * weights[c + n - 1];
        const double z = static_cast<double>(c) * step_z;
        const double dist = std::sqrt(x * x + y * y + z * z);
        if (!(dist > 0.0)) {
          throw InvalidParameter("quadrature lattice places the two atoms at the same point");
        }
        row += w * f(dist);
        row_norm += w;
      }
      total += row;
      norm += row_norm;
    }
  }
  return total / norm;
}

FidelityReport grid_average_fidelity(const DistanceFidelity& table, const InflatedSigmas& sigmas,
                                     double trap_separation, const QuadratureSpec& quad) {
  const auto start = std::chrono::steady_clock::now();
  FidelityReport r;
  r.mean_fidelity = grid_average([&table](double d) { return table(d); }, sigmas, trap_separation, quad);
  r.net_fidelity = r.mean_fidelity;
  r.sample_count = grid_sample_count(quad);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.convergence.push_back({quad.delta, r.mean_fidelity, r.sample_count, secs});
  return r;
}

FidelityReport grid_average_fidelity(const GateProtocol& protocol, const VdwModel& vdw, const InflatedSigmas& sigmas,
                                     double trap_separation, const QuadratureSpec& quad) {
  const DistanceFidelity table = make_distance_fidelity(protocol, vdw, sigmas, trap_separation);
  return grid_average_fidelity(table, sigmas, trap_separation, quad);
}

double extrapolate_to_zero_step(std::span<const ConvergencePoint> series) {
  if (series.empty()) throw InvalidParameter("empty convergence series");
  if (series.size() == 1) return series.front().mean_fidelity;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const ConvergencePoint& p : series) {
    sx += p.delta;
    sy += p.mean_fidelity;
    sxx += p.delta * p.delta;
    sxy += p.delta * p.mean_fidelity;
  }
  const double n = static_cast<double>(series.size());
  const double det = n * sxx - sx * sx;
  if (!(std::abs(det) > 0.0)) return sy / n;
  return (sxx * sy - sx * sxy) / det;
}

FidelityReport grid_convergence(const DistanceFidelity& table, const InflatedSigmas& sigmas, double trap_separation,
                                std::span<const double> deltas, double half_range) {
  if (deltas.empty()) throw InvalidParameter("convergence study needs at least one step");
  FidelityReport r;
  for (double delta : deltas) {
    const FidelityReport one = grid_average_fidelity(table, sigmas, trap_separation, {delta, half_range});
    r.convergence.push_back(one.convergence.front());
    r.sample_count += one.sample_count;
  }
  r.mean_fidelity = std::clamp(extrapolate_to_zero_step(r.convergence), 0.0, 1.0);
  r.net_fidelity = r.mean_fidelity;
  return r;
}

// ---------------------------------------------------------------------------
// Monte Carlo

namespace {

struct ChunkSums {
  double infidelity = 0.0;  // sum of 1 - F
  double infidelity_sq = 0.0;
};

ChunkSums run_chunk(const DistanceFidelity& table, const InflatedSigmas& sigmas, double trap_separation,
                    const MonteCarloSpec& spec, std::uint64_t chunk, std::uint64_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  auto draw = [&]() {
    if (!spec.truncation) return normal(rng);
    for (;;) {
      const double z = normal(rng);
      if (std::abs(z) <= *spec.truncation) return z;
    }
  };

  ChunkSums s;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double xc = draw(), yc = draw(), zc = draw();
    const double xt = draw(), yt = draw(), zt = draw();
    QubitGeometry g;
    g.control_offset = {xc * sigmas.sigma_perp, yc * sigmas.sigma_perp, zc * sigmas.sigma_z};
    g.target_offset = {xt * sigmas.sigma_perp, yt * sigmas.sigma_perp, zt * sigmas.sigma_z};
    g.trap_separation = trap_separation;
    const double loss = 1.0 - table(distance(g));
    s.infidelity += loss;
    s.infidelity_sq += loss * loss;
  }
  return s;
}

}  // namespace

FidelityReport monte_carlo_average_fidelity(const DistanceFidelity& table, const InflatedSigmas& sigmas,
                                            double trap_separation, const MonteCarloSpec& spec) {
  if (spec.samples < 1000) throw InvalidParameter("Monte Carlo needs at least 1000 samples");
  if (spec.truncation && !positive(*spec.truncation)) throw InvalidParameter("truncation must be positive");
  if (!positive(trap_separation)) throw InvalidParameter("trap separation must be positive");

  const std::uint64_t chunks = (spec.samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<ChunkSums> sums(chunks);
  parallel_blocks(chunks, spec.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const std::uint64_t first = c * kMonteCarloChunk;
      const std::uint64_t count = std::min(kMonteCarloChunk, spec.samples - first);
      sums[c] = run_chunk(table, sigmas, trap_separation, spec, c, count);
    }
  });

  // Fixed-order reduction keeps the result independent of the thread count.
  ChunkSums total;
  for (const ChunkSums& s : sums) {
    total.infidelity += s.infidelity;
    total.infidelity_sq += s.infidelity_sq;
  }
  const double n = static_cast<double>(spec.samples);
  const double mean_loss = total.infidelity / n;
  const double var = std::max(0.0, (total.infidelity_sq - n * mean_loss * mean_loss) / (n - 1.0));

  FidelityReport r;
  r.mean_fidelity = 1.0 - mean_loss;
  r.net_fidelity = r.mean_fidelity;
  r.std_error = std::sqrt(var / n);
  r.sample_count = spec.samples;
  return r;
}

FidelityReport monte_carlo_average_fidelity(const GateProtocol& protocol, const VdwModel& vdw,
                                            const InflatedSigmas& sigmas, double trap_separation,
                                            const MonteCarloSpec& spec) {
  const DistanceFidelity table = make_distance_fidelity(protocol, vdw, sigmas, trap_separation,
                                                        DistanceFidelity::kDefaultPoints, spec.threads);
  return monte_carlo_average_fidelity(table, sigmas, trap_separation, spec);
}

double decay_error_from_exposure(double t_ryd, double lifetime_ms) {
  if (!positive(lifetime_ms)) throw InvalidParameter("Rydberg lifetime must be positive");
  return t_ryd / us_from_ms(lifetime_ms);
}

double decay_error(const GateProtocol& protocol, const NoiseConfig& cfg) {
  if (!positive(cfg.rydberg_lifetime)) throw InvalidParameter("Rydberg lifetime must be positive");
  return decay_error_from_exposure(rydberg_exposure(protocol), cfg.rydberg_lifetime);
}

}  // namespace rydgate
