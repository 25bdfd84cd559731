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

#include "rydgate/interaction.hpp"

#include <cmath>

#include "rydgate/error.hpp"

namespace rydgate {

namespace {

void check_model(const VdwModel& model) {
  if (!std::isfinite(model.c6_over_hbar) || model.c6_over_hbar <= 0.0) {
    throw InvalidParameter("C6 must be positive");
  }
}

}  // namespace

double distance(const QubitGeometry& geom) {
  const Vec3& c = geom.control_offset;
  const Vec3& t = geom.target_offset;
  return std::sqrt(std::pow(c.x - t.x - geom.trap_separation, 2) + std::pow(c.y - t.y, 2) + std::pow(c.z - t.z, 2));
}

double vdw_interaction(const VdwModel& model, double dist) {
  check_model(model);
  if (!(dist > 0.0) || !std::isfinite(dist)) {
    throw InvalidParameter("interatomic distance must be positive");
  }
  const double d2 = dist * dist;
  return model.c6_over_hbar / (d2 * d2 * d2);
}

double separation_for_interaction(const VdwModel& model, double interaction) {
  check_model(model);
  if (!(interaction > 0.0) || !std::isfinite(interaction)) {
    throw InvalidParameter("interaction must be positive to invert the vdW law");
  }
  return std::pow(model.c6_over_hbar / interaction, 1.0 / 6.0);
}

}  // namespace rydgate
