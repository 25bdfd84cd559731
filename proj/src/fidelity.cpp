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

#include "rydgate/fidelity.hpp"

#include <cmath>

namespace rydgate {

double GateMatrix::max_singular_value() const {
  Eigen::JacobiSVD<Matrix4> svd(m);
  return svd.singularValues()(0);
}

IdealGate IdealGate::controlled_phase(double theta) {
  IdealGate g;
  g.u(3, 3) = std::polar(1.0, theta);
  return g;
}

IdealGate IdealGate::cnot() {
  IdealGate g;
  g.u(2, 2) = 0.0;
  g.u(3, 3) = 0.0;
  g.u(2, 3) = 1.0;
  g.u(3, 2) = 1.0;
  return g;
}

IdealGate IdealGate::for_target(const TargetGate& target) {
  return target.kind == TargetGate::Kind::cnot ? cnot() : controlled_phase(target.theta);
}

GateMatrix computational_block(const Operator& propagator) {
  GateMatrix g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      g.m(i, j) = propagator(kComputationalIndices[i], kComputationalIndices[j]);
    }
  }
  const double ref = std::abs(g.m(0, 0));
  if (ref > 0.0) {
    g.m *= std::conj(g.m(0, 0)) / ref;
  }
  return g;
}

GateMatrix extract_gate_matrix(const GateProtocol& protocol, double interaction) {
  validate(protocol);
  return computational_block(protocol_unitary(protocol, interaction));
}

GateMatrix extract_gate_matrix(const GateProtocol& protocol) {
  return extract_gate_matrix(protocol, protocol.nominal_interaction);
}

double pedersen_fidelity(const GateMatrix& actual, const IdealGate& ideal) {
  const Matrix4 overlap = ideal.u.adjoint() * actual.m;
  const double trace_term = std::norm(overlap.trace());
  const double leakage_term = (overlap * overlap.adjoint()).trace().real();
  return (trace_term + leakage_term) / 20.0;
}

Matrix4 barred_target_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd bar;
  bar << s, s,  //
      -s, s;
  Matrix4 b = Matrix4::Zero();
  b.topLeftCorner<2, 2>() = bar;
  b.bottomRightCorner<2, 2>() = bar;
  return b;
}

}  // namespace rydgate
