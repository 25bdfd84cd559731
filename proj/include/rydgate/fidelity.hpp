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

#include <array>

#include <Eigen/Dense>

#include "rydgate/pulse.hpp"

namespace rydgate {

using Matrix4 = Eigen::Matrix<Complex, 4, 4>;

/// Positions of |00>, |01>, |10>, |11> in the 9-dim basis.
inline constexpr std::array<int, 4> kComputationalIndices = {
    basis_index(Level::g0, Level::g0), basis_index(Level::g0, Level::g1), basis_index(Level::g1, Level::g0),
    basis_index(Level::g1, Level::g1)};

/// Computational-basis block of a propagator. Sub-unitary when population
/// leaks into Rydberg levels.
struct GateMatrix {
  Matrix4 m = Matrix4::Identity();

  double max_singular_value() const;
};

struct IdealGate {
  Matrix4 u = Matrix4::Identity();

  /// diag(1, 1, 1, e^{i theta})
  static IdealGate controlled_phase(double theta);
  /// |10> <-> |11>
  static IdealGate cnot();
  static IdealGate for_target(const TargetGate& target);
};

/// Projects a full propagator onto the computational block and removes the
/// global phase so that the |00> -> |00> element is real and non-negative.
GateMatrix computational_block(const Operator& propagator);

/// Propagates the protocol at `interaction` and returns its phase-normalized
/// computational block.
GateMatrix extract_gate_matrix(const GateProtocol& protocol, double interaction);

/// At the protocol's nominal interaction.
GateMatrix extract_gate_matrix(const GateProtocol& protocol);

/// Average gate fidelity for a possibly leaky 4x4 gate:
/// [|Tr(U^dag M)|^2 + Tr(U^dag M M^dag U)] / 20.
double pedersen_fidelity(const GateMatrix& actual, const IdealGate& ideal);

/// Basis change from {|c 0bar>, |c 1bar>} to {|c 0>, |c 1>}, with
/// |0bar> = (|0> - |1>)/sqrt2 and |1bar> = (|0> + |1>)/sqrt2 on the target.
/// Columns are the barred basis vectors.
Matrix4 barred_target_basis();

}  // namespace rydgate
