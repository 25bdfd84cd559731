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

#include <iosfwd>
#include <vector>

#include "rydgate/config.hpp"
#include "rydgate/records.hpp"

namespace rydgate {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitConfig = 2;

/// Design values only: theta, V, t0, t_gate and the trap separation.
ResultRecord cmd_solve(const RunConfig& c);

/// Gate matrix, fidelity, T_Ryd and both decay errors at one interaction
/// (the override if given, else V at the configured separation, else nominal).
ResultRecord cmd_simulate(const RunConfig& c);

/// Position-averaged fidelity by lattice quadrature and/or Monte Carlo.
ResultRecord cmd_fidelity(const RunConfig& c);

/// One record per value of c.sweep.axis, in ascending order.
std::vector<ResultRecord> cmd_sweep(const RunConfig& c);

/// Entry point of the `rydgate` tool. Returns 0 on success, 1 on numeric
/// failure and 2 on a configuration or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rydgate
