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

#include "rydgate/units.hpp"

namespace rydgate {

/// Isotropic van der Waals shift of |rr>, V = C6 / d^6.
struct VdwModel {
  double c6_over_hbar = kDefaultC6OverHbar;  // rad/us um^6
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Trap centres at the origin (control) and (L, 0, 0) (target); the atoms sit
/// at the centres plus their offsets.
struct QubitGeometry {
  Vec3 control_offset;
  Vec3 target_offset;
  double trap_separation = 0.0;  // L, um
};

/// Actual interatomic distance, um.
double distance(const QubitGeometry& geom);

/// V/hbar in rad/us. Throws InvalidParameter for dist <= 0 or c6 <= 0.
double vdw_interaction(const VdwModel& model, double dist);

/// Distance at which the shift equals `interaction`. Throws InvalidParameter
/// for interaction <= 0.
double separation_for_interaction(const VdwModel& model, double interaction);

}  // namespace rydgate
