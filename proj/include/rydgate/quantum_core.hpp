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

#include <complex>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace rydgate {

using Complex = std::complex<double>;

/// Single-atom levels: the two hyperfine qubit states and one Rydberg state.
enum class Level : std::uint8_t { g0 = 0, g1 = 1, ryd = 2 };

enum class Atom : std::uint8_t { control, target };

inline constexpr int kLevels = 3;
inline constexpr int kDim = kLevels * kLevels;

/// Index of |control, target> in the 9-dim product basis.
constexpr int basis_index(Level control, Level target) noexcept {
  return kLevels * static_cast<int>(control) + static_cast<int>(target);
}

using Operator = Eigen::Matrix<Complex, kDim, kDim>;
using Amplitudes = Eigen::Matrix<Complex, kDim, 1>;

/// One laser coupling on one atom: amplitude/2 |to><from| + h.c.
struct Drive {
  Atom atom = Atom::control;
  Level from = Level::g1;
  Level to = Level::ryd;
  Complex amplitude{0.0, 0.0};  // Rabi frequency, rad/us
};

/// Two-atom Hamiltonian in rad/us. Hermitian by construction.
class Hamiltonian {
 public:
  Hamiltonian() : matrix_(Operator::Zero()) {}

  /// Wraps an arbitrary matrix; throws NumericError unless it is Hermitian
  /// to 1e-12 elementwise.
  static Hamiltonian from_matrix(const Operator& m);

  const Operator& matrix() const noexcept { return matrix_; }

  /// max |H - H^dagger| over all entries.
  double hermiticity_defect() const;

 private:
  explicit Hamiltonian(const Operator& m) : matrix_(m) {}

  friend Hamiltonian build_hamiltonian(std::span<const Drive>, double);

  Operator matrix_;
};

/// Sum of the drive terms plus `interaction` on |rr><rr|.
/// Throws InvalidParameter on non-finite input or a drive with from == to.
Hamiltonian build_hamiltonian(std::span<const Drive> drives, double interaction);

class TwoAtomState {
 public:
  TwoAtomState() : amp_(Amplitudes::Zero()) { amp_(0) = 1.0; }
  explicit TwoAtomState(const Amplitudes& amp) : amp_(amp) {}

  static TwoAtomState basis(Level control, Level target);

  const Amplitudes& amplitudes() const noexcept { return amp_; }
  Complex amplitude(Level control, Level target) const { return amp_(basis_index(control, target)); }

  double norm() const { return amp_.norm(); }

  /// Expected number of atoms in |r>: sum over a in {0,1} of |<ar>|^2 + |<ra>|^2,
  /// plus 2|<rr>|^2.
  double rydberg_population() const;

 private:
  Amplitudes amp_;
};

/// exp(-i H t) for one piecewise-constant interval.
struct PropagatorSegment {
  Operator unitary = Operator::Identity();
  double duration = 0.0;  // us
};

/// Exact propagator through the Hermitian eigendecomposition of `h`.
/// Throws InvalidParameter for t < 0 or non-finite t, NumericError if the
/// eigensolver fails.
PropagatorSegment exponentiate(const Hamiltonian& h, double t);

/// Applies the segments in order. Throws InvalidParameter if `segments` is empty.
TwoAtomState evolve(const TwoAtomState& state, std::span<const PropagatorSegment> segments);

/// max |U^dagger U - I| over all entries.
double unitarity_defect(const Operator& u);

}  // namespace rydgate
