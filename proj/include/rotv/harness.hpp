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

#ifndef ROTV_HARNESS_HPP
#define ROTV_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rotv/config.hpp"
#include "rotv/metrics.hpp"
#include "rotv/sim.hpp"

namespace rotv {

enum class ControllerKind { kLqr, kPid };

std::string controller_name(ControllerKind kind);
ControllerKind controller_by_name(const std::string& name);

// Canned courses.  The RunConfig's optional scenario overrides (profile,
// course length, speeds, rates, altitude) are applied on top of each preset.
//
//   nominal    terrain-following at 5 m/s over flats, a slope and two ledges
//   disturbed  longer course with Gaussian load disturbances enabled
//   gainsched  flat bed, slow 0 -> 5 m/s ramp with five depth steps so each
//              step lands at a different tow speed
//   tuning     flat bed, one -0.5 m depth step; used to match PID to LQR
Scenario nominal_scenario(const RunConfig& config);
Scenario disturbed_scenario(const RunConfig& config);
Scenario gainsched_scenario(const RunConfig& config);
Scenario tuning_scenario(const RunConfig& config);
Scenario scenario_by_name(const std::string& name, const RunConfig& config);

// Builds the gain schedule for the config's speed grid.
GainSchedule make_schedule(const RunConfig& config);

ControllerVariant make_controller(ControllerKind kind, const RunConfig& config,
                                  const GainSchedule& schedule,
                                  const PidSettings& pid);

// Scales the three depth-loop gains by a common factor until the PID settling
// time on the tuning step matches the gain-scheduled controller's within 5%.
// Throws SynthesisError when no factor in the search range achieves that.
PidSettings autotune_pid(const RunConfig& config, const GainSchedule& schedule);

// PID settings actually used for runs: the config's own gains when the file
// pinned them, otherwise the autotuned ones.
PidSettings resolve_pid(const RunConfig& config, const GainSchedule& schedule);

struct ScenarioRun {
  Scenario scenario;
  Trajectory trajectory;
  Metrics metrics;
  std::string report;
  std::string csv_path;     // empty when out_dir was empty
  std::string report_path;  // ditto
};

// Runs one controller through one preset course.  When out_dir is non-empty
// the trajectory lands in <out_dir>/<scenario>_<controller>[_seed<N>].csv
// (the seed suffix appears only for disturbed courses) next to a .txt report.
ScenarioRun run_scenario(const std::string& scenario_name, ControllerKind kind,
                         const RunConfig& config, std::uint64_t seed,
                         const std::string& out_dir);

// Head-to-head table of both controllers on one preset course: rows are
// metrics, columns lqr / pid / pid-to-lqr ratio, metrics averaged over
// `seeds`.  When out_dir is non-empty every run's trajectory is written as in
// run_scenario.
std::string compare_controllers(const RunConfig& config,
                                const std::string& scenario_name,
                                const std::vector<std::uint64_t>& seeds,
                                const std::string& out_dir);

}  // namespace rotv

#endif  // ROTV_HARNESS_HPP
