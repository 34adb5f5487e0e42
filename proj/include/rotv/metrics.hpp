// Copyright 2026 The rotvlab Authors
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

#ifndef ROTV_METRICS_HPP
#define ROTV_METRICS_HPP

#include <array>
#include <string>
#include <vector>

#include "rotv/sim.hpp"

namespace rotv {

// Tracking quality on one flat seabed stretch: mean absolute depth error
// over the last half of the stretch.
struct FlatWindowMetric {
  double x0 = 0.0, x1 = 0.0;
  double steady_state_error = 0.0;  // m
};

// Response to one depth-reference step (ledge or commanded).
struct StepMetric {
  double time = 0.0;       // s, when the step was seen
  double magnitude = 0.0;  // m, signed reference jump
  double overshoot = 0.0;  // m past the new reference, in the step direction
  double settling_time = 0.0;  // s to enter and stay in the 2% band
  bool settled = false;
  double max_deflection = 0.0;  // rad, any fin, over the step's window
};

struct Metrics {
  double max_abs_depth_error = 0.0;  // m
  double max_abs_roll = 0.0;         // rad
  double max_abs_pitch = 0.0;        // rad
  std::array<double, 3> max_abs_deflection = {0.0, 0.0, 0.0};  // rad
  double control_effort = 0.0;  // sqrt(sum (du/dt)^2 dt) over all fins
  std::vector<FlatWindowMetric> flat_windows;
  std::vector<StepMetric> steps;

  double worst_steady_state_error() const;
  double worst_settling_time() const;  // inf when any step never settled
  double max_overshoot() const;
};

// Evaluates the trajectory against the scenario's terrain features, honoring
// the scenario's along-track metrics window.  The settling band is 2% of the
// step magnitude.
Metrics compute_metrics(const Trajectory& trajectory, const Scenario& scenario);

// Deterministic plain-text rendering (fixed formatting, no timestamps).
std::string metrics_report(const Metrics& metrics, const Scenario& scenario,
                           const std::string& controller_name,
                           std::uint64_t seed);

}  // namespace rotv

#endif  // ROTV_METRICS_HPP
