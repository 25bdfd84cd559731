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

#include "rydgate/quantum_core.hpp"

#include <cmath>

#include "rydgate/error.hpp"

namespace rydgate {

namespace {

constexpr double kHermitianTolerance = 1e-12;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

constexpr Level kAllLevels[] = {Level::g0, Level::g1, Level::ryd};

}  // namespace

Hamiltonian Hamiltonian::from_matrix(const Operator& m) {
  Hamiltonian h(m);
  if (!m.allFinite() || h.hermiticity_defect() > kHermitianTolerance) {
    throw NumericError("Hamiltonian matrix is not Hermitian");
  }
  return h;
}

double Hamiltonian::hermiticity_defect() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

Hamiltonian build_hamiltonian(std::span<const Drive> drives, double interaction) {
  if (!std::isfinite(interaction)) {
    throw InvalidParameter("interaction must be finite");
  }
  Operator m = Operator::Zero();
  for (const Drive& d : drives) {
    if (!finite(d.amplitude)) {
      throw InvalidParameter("drive amplitude must be finite");
    }
    if (d.from == d.to) {
      throw InvalidParameter("drive must couple two distinct levels");
    }
    const Complex half = 0.5 * d.amplitude;
    // The undriven atom is a spectator in any of its three levels.
    for (Level spectator : kAllLevels) {
      const int to = d.atom == Atom::control ? basis_index(d.to, spectator) : basis_index(spectator, d.to);
      const int from = d.atom == Atom::control ? basis_index(d.from, spectator) : basis_index(spectator, d.from);
      m(to, from) += half;
      m(from, to) += std::conj(half);
    }
  }
  m(basis_index(Level::ryd, Level::ryd), basis_index(Level::ryd, Level::ryd)) += interaction;
  return Hamiltonian(m);
}

TwoAtomState TwoAtomState::basis(Level control, Level target) {
  Amplitudes a = Amplitudes::Zero();
  a(basis_index(control, target)) = 1.0;
  return TwoAtomState(a);
}

double TwoAtomState::rydberg_population() const {
  double n = 0.0;
  for (Level c : kAllLevels) {
    for (Level t : kAllLevels) {
      const int excited = (c == Level::ryd ? 1 : 0) + (t == Level::ryd ? 1 : 0);
      n += excited * std::norm(amp_(basis_index(c, t)));
    }
  }
  return n;
}

PropagatorSegment exponentiate(const Hamiltonian& h, double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw InvalidParameter("propagation time must be finite and non-negative");
  }
  Eigen::SelfAdjointEigenSolver<Operator> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericError("Hermitian eigendecomposition failed");
  }
  const Eigen::Matrix<double, kDim, 1>& energies = solver.eigenvalues();
  Eigen::Matrix<Complex, kDim, 1> phases;
  for (int k = 0; k < kDim; ++k) {
    phases(k) = std::polar(1.0, -energies(k) * t);
  }
  const Operator& vecs = solver.eigenvectors();
  return {vecs * phases.asDiagonal() * vecs.adjoint(), t};
}

TwoAtomState evolve(const TwoAtomState& state, std::span<const PropagatorSegment> segments) {
  if (segments.empty()) {
    throw InvalidParameter("evolve needs at least one segment");
  }
  Amplitudes a = state.amplitudes();
  for (const PropagatorSegment& s : segments) {
    a = s.unitary * a;
  }
  return TwoAtomState(a);
}

double unitarity_defect(const Operator& u) {
  return (u.adjoint() * u - Operator::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace rydgate
