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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rydgate/error.hpp"
#include "rydgate/exposure.hpp"
#include "rydgate/protocol.hpp"
#include "rydgate/quantum_core.hpp"

using namespace rydgate;

namespace {

const double kOmega = angular_from_mhz(0.8);

double max_abs(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

Hamiltonian target_block_hamiltonian(double omega_t, double v) {
  const std::vector<Drive> d = {{Atom::target, Level::g1, Level::ryd, omega_t}};
  return build_hamiltonian(d, v);
}

}  // namespace

TEST_CASE("basis ordering is 3 * control + target") {
  CHECK(kDim == 9);
  CHECK(basis_index(Level::g0, Level::g0) == 0);
  CHECK(basis_index(Level::g0, Level::ryd) == 2);
  CHECK(basis_index(Level::g1, Level::g0) == 3);
  CHECK(basis_index(Level::ryd, Level::g1) == 7);
  CHECK(basis_index(Level::ryd, Level::ryd) == 8);
  const TwoAtomState s = TwoAtomState::basis(Level::g1, Level::ryd);
  CHECK(s.amplitudes()(5) == Complex(1.0));
  CHECK(s.norm() == doctest::Approx(1.0));
}

TEST_CASE("empty drive list and zero interaction give the zero matrix") {
  const Hamiltonian h = build_hamiltonian({}, 0.0);
  CHECK(max_abs(h.matrix()) == 0.0);
}

TEST_CASE("single control drive couples |1x> and |rx> for every target level") {
  const std::vector<Drive> d = {{Atom::control, Level::g1, Level::ryd, kOmega}};
  const Operator m = build_hamiltonian(d, 0.0).matrix();
  int nonzero = 0;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if (std::abs(m(i, j)) > 0.0) ++nonzero;
    }
  }
  CHECK(nonzero == 6);
  for (int x = 0; x < 3; ++x) {
    const int one = 3 + x;
    const int ryd = 6 + x;
    CHECK(std::abs(m(ryd, one)) == doctest::Approx(kOmega / 2.0));
    CHECK(std::abs(m(one, ryd)) == doctest::Approx(kOmega / 2.0));
  }
}

TEST_CASE("target block eigenvalues match the 2x2 eigensolve") {
  const double v = angular_from_mhz(0.4619);
  const Operator m = target_block_hamiltonian(kOmega, v).matrix();
  // {|r1>, |rr>} = {7, 8}
  Eigen::Matrix2cd block;
  block << m(7, 7), m(7, 8), m(8, 7), m(8, 8);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
  const auto [lo, hi] = oracle::symmetric_eigenvalues(0.0, kOmega / 2.0, v);
  CHECK(es.eigenvalues()(0) == doctest::Approx(lo).epsilon(1e-13));
  CHECK(es.eigenvalues()(1) == doctest::Approx(hi).epsilon(1e-13));
  const double wbar = std::sqrt(kOmega * kOmega + v * v);
  CHECK(lo == doctest::Approx((v - wbar) / 2.0).epsilon(1e-13));
  CHECK(wbar == doctest::Approx(angular_from_mhz(0.9238)).epsilon(1e-4));
}

TEST_CASE("built Hamiltonians are Hermitian and match an independent assembly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Drive> drives;
    Operator expected = Operator::Zero();
    for (int k = 0; k < 3; ++k) {
      Drive d;
      d.atom = (trial + k) % 2 ? Atom::control : Atom::target;
      d.from = static_cast<Level>(k % 2);
      d.to = Level::ryd;
      d.amplitude = Complex(u(rng), u(rng));
      drives.push_back(d);
      for (int other = 0; other < 3; ++other) {
        const int from = d.atom == Atom::control ? 3 * static_cast<int>(d.from) + other : 3 * other + static_cast<int>(d.from);
        const int to = d.atom == Atom::control ? 3 * static_cast<int>(d.to) + other : 3 * other + static_cast<int>(d.to);
        expected(to, from) += d.amplitude / 2.0;
        expected(from, to) += std::conj(d.amplitude) / 2.0;
      }
    }
    const double v = u(rng);
    expected(8, 8) += v;
    const Hamiltonian h = build_hamiltonian(drives, v);
    CHECK(h.hermiticity_defect() < 1e-12);
    CHECK(max_abs(h.matrix() - expected) < 1e-15);
  }
}

TEST_CASE("build_hamiltonian rejects bad input") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::vector<Drive> bad_amp = {{Atom::control, Level::g1, Level::ryd, Complex(nan, 0.0)}};
  CHECK_THROWS_AS(build_hamiltonian(bad_amp, 0.0), InvalidParameter);
  const std::vector<Drive> same = {{Atom::control, Level::g1, Level::g1, 1.0}};
  CHECK_THROWS_AS(build_hamiltonian(same, 0.0), InvalidParameter);
  CHECK_THROWS_AS(build_hamiltonian({}, std::numeric_limits<double>::infinity()), InvalidParameter);
}

TEST_CASE("exponentiate: identity, pi pulse, detuned cycle") {
  SUBCASE("zero Hamiltonian") {
    CHECK(max_abs(exponentiate(Hamiltonian{}, 2.7).unitary - Operator::Identity()) == 0.0);
  }
  SUBCASE("resonant pi pulse sends |1> to -i|r>") {
    const std::vector<Drive> d = {{Atom::control, Level::g1, Level::ryd, kOmega}};
    const PropagatorSegment seg = exponentiate(build_hamiltonian(d, 0.0), oracle::kPi / kOmega);
    const std::vector<PropagatorSegment> segs = {seg};
    const TwoAtomState out = evolve(TwoAtomState::basis(Level::g1, Level::g0), segs);
    CHECK(std::abs(out.amplitude(Level::ryd, Level::g0) - Complex(0.0, -1.0)) < 1e-12);
  }
  SUBCASE("detuned cycle returns |r1> with phase -pi(1 + V/wbar)") {
    const double v = angular_from_mhz(0.4619);
    const double wbar = std::sqrt(kOmega * kOmega + v * v);
    const PropagatorSegment seg = exponentiate(target_block_hamiltonian(kOmega, v), 2.0 * oracle::kPi / wbar);
    const Complex a = seg.unitary(7, 7);
    CHECK(std::abs(std::abs(a) - 1.0) < 1e-10);
    CHECK(std::abs(oracle::angle_diff(std::arg(a), -oracle::kPi * (1.0 + v / wbar))) < 1e-9);
  }
}

TEST_CASE("exponentiate rejects negative time and non-Hermitian input") {
  CHECK_THROWS_AS(exponentiate(Hamiltonian{}, -1.0), InvalidParameter);
  Operator m = Operator::Zero();
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(Hamiltonian::from_matrix(m), NumericError);
}

TEST_CASE("propagators are unitary and agree with RK4") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<Drive> d = {{Atom::control, Level::g1, Level::ryd, Complex(u(rng) * 5.0, u(rng))},
                                  {Atom::target, Level::g0, Level::ryd, u(rng) * 3.0}};
    const Hamiltonian h = build_hamiltonian(d, u(rng) * 4.0);
    const double t = u(rng);
    const Operator exact = exponentiate(h, t).unitary;
    CHECK(unitarity_defect(exact) < 1e-10);
    CHECK(max_abs(exact - oracle::rk4_propagator(h.matrix(), t)) < 1e-6);
  }
}

TEST_CASE("detuned-cycle phase law holds for both signs of V") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 30.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double w = u(rng);
    const double v = (trial % 2 ? 1.0 : -1.0) * u(rng);
    const double wbar = std::sqrt(w * w + v * v);
    const Complex a = exponentiate(target_block_hamiltonian(w, v), 2.0 * oracle::kPi / wbar).unitary(7, 7);
    CHECK(std::abs(std::abs(a) - 1.0) < 1e-10);
    CHECK(std::abs(oracle::angle_diff(std::arg(a), -oracle::kPi * (1.0 + v / wbar))) < 1e-9);
  }
}

TEST_CASE("opposite target drives cancel on the single-excitation block") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  const double v = angular_from_mhz(0.4619);
  for (int trial = 0; trial < 20; ++trial) {
    const double t0 = u(rng);
    const std::vector<Drive> plus = {{Atom::target, Level::g1, Level::ryd, kOmega}};
    const std::vector<Drive> minus = {{Atom::target, Level::g1, Level::ryd, -kOmega}};
    const std::vector<PropagatorSegment> segs = {exponentiate(build_hamiltonian(plus, v), t0),
                                                 exponentiate(build_hamiltonian(minus, v), t0)};
    const TwoAtomState in = TwoAtomState::basis(Level::g0, Level::g1);
    const TwoAtomState out = evolve(in, segs);
    CHECK((out.amplitudes() - in.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("evolve: identity, adjoint, norm, CZ on |11>") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g;
  Amplitudes a;
  for (int i = 0; i < kDim; ++i) a(i) = Complex(g(rng), g(rng));
  const TwoAtomState psi(a.normalized());

  const std::vector<PropagatorSegment> ident = {PropagatorSegment{}, PropagatorSegment{}};
  CHECK((evolve(psi, ident).amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() == 0.0);

  const std::vector<Drive> d = {{Atom::control, Level::g1, Level::ryd, Complex(1.3, 0.4)},
                                {Atom::target, Level::g0, Level::ryd, 0.7}};
  const PropagatorSegment s = exponentiate(build_hamiltonian(d, 2.0), 1.7);
  const std::vector<PropagatorSegment> there_and_back = {s, {s.unitary.adjoint(), s.duration}};
  const TwoAtomState back = evolve(psi, there_and_back);
  CHECK((back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(evolve(psi, std::vector<PropagatorSegment>{s}).norm() - 1.0) < 1e-12);

  CHECK_THROWS_AS(evolve(psi, std::vector<PropagatorSegment>{}), InvalidParameter);

  const ProtocolParams p = design_protocol(kOmega, kOmega, oracle::kPi);
  const GateProtocol cz = build_cz_protocol(p);
  const TwoAtomState out = evolve(TwoAtomState::basis(Level::g1, Level::g1), protocol_propagators(cz, p.interaction));
  CHECK(std::abs(out.amplitude(Level::g1, Level::g1) - Complex(-1.0)) < 1e-10);
  CHECK(std::abs(out.norm() - 1.0) < 1e-12);
}

TEST_CASE("Rydberg exposure at the design point") {
  const ProtocolParams p = design_protocol(kOmega, kOmega, oracle::kPi);
  const GateProtocol cz = build_cz_protocol(p);
  const double t_ryd = rydberg_exposure(cz);
  CHECK(t_ryd == doctest::Approx(1.91).epsilon(0.02 / 1.91));
  CHECK(t_ryd == doctest::Approx(oracle::rk4_exposure(cz, p.interaction)).epsilon(1e-7));
}

TEST_CASE("Rydberg exposure with doubled control Rabi frequency matches direct integration") {
  const ProtocolParams p = design_protocol(2.0 * kOmega, kOmega, oracle::kPi);
  const GateProtocol cz = build_cz_protocol(p);
  const double t_ryd = rydberg_exposure(cz);
  CHECK(t_ryd == doctest::Approx(oracle::rk4_exposure(cz, p.interaction)).epsilon(1e-7));
  // Pulse 2 dominates, so the exposure is far above 1.52 * 2pi / omega_c here.
  CHECK(t_ryd > 1.52 * 2.0 * oracle::kPi / (2.0 * kOmega));
}

TEST_CASE("Rydberg exposure edge cases") {
  const ProtocolParams p = design_protocol(kOmega, kOmega, oracle::kPi);
  const GateProtocol cz = build_cz_protocol(p);
  const auto inputs = computational_basis_states();
  CHECK(rydberg_exposure(inputs, GateProtocol{}, 0.01) == 0.0);
  CHECK_THROWS_AS(rydberg_exposure(inputs, cz, 0.7), InvalidParameter);
  CHECK_THROWS_AS(rydberg_exposure(inputs, cz, 0.0), InvalidParameter);
  const std::array<TwoAtomState, 1> only00 = {TwoAtomState::basis(Level::g0, Level::g0)};
  CHECK(rydberg_exposure(only00, cz, 1e-3) == doctest::Approx(0.0));
}
