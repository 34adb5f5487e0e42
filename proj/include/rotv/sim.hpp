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

#ifndef ROTV_SIM_HPP
#define ROTV_SIM_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "rotv/actuators.hpp"
#include "rotv/controllers.hpp"
#include "rotv/terrain.hpp"
#include "rotv/types.hpp"
#include "rotv/vehicle.hpp"

namespace rotv {

// Gaussian slow-varying load disturbance, redrawn once per control period.
// The three draws are N(0, sigma) scaled per axis; the default scales mirror
// the heave/roll/pitch force levels the model was validated against.
struct DisturbanceConfig {
  bool enabled = false;
  double sigma = 0.4;
  std::array<double, 6> scale = {0.0, 0.0, 2.0, 15.0, 5.0, 0.0};
};

// Deterministic standard-normal stream: explicit Box-Muller over the 64-bit
// Mersenne Twister so identical seeds give identical sequences on every
// platform, independent of the standard library's distribution internals.
class GaussianDraws {
 public:
  explicit GaussianDraws(std::uint64_t seed) : rng_(seed) {}
  double next();

 private:
  std::mt19937_64 rng_;
};

// Draws the heave force / roll moment / pitch moment disturbance (that
// order); zero when disabled.
GeneralizedForce sample_disturbance(GaussianDraws& rng,
                                    const DisturbanceConfig& config);

// A commanded depth-reference change at a point in time (added to the
// terrain-following reference).
struct ReferenceStep {
  double time = 0.0;   // s
  double delta = 0.0;  // m of NED depth; negative steps shallower
};

struct Scenario {
  std::string name = "nominal";
  SeabedProfile profile;
  double course_length = 100.0;   // m; the run ends when x reaches this
  double target_surge = 5.0;      // m/s
  double initial_surge = 0.0;     // m/s, tow speed the ramp starts from
  long ramp_ticks = 200;          // physics ticks of linear ramp to target
  long controller_start_tick = 200;
  double target_altitude = 3.0;   // m above the seabed
  int physics_hz = 200;
  int control_hz = 50;
  DisturbanceConfig disturbance;
  std::vector<ReferenceStep> ref_steps;
  // Metrics are evaluated only inside this along-track window.
  double metrics_min_x = 0.0;
  double metrics_max_x = std::numeric_limits<double>::infinity();
};

// Throws ConfigError when rates or lengths are out of contract (physics rate
// must be a multiple of the control rate, ...).
void validate(const Scenario& scenario);

// Tow speed at time t under the scenario's linear start-up ramp.
double surge_at(const Scenario& scenario, double t);

// Commanded depth at along-track position x and time t.
double reference_depth(const Scenario& scenario, double x, double t);

// One logged physics tick.
struct TrajectoryRow {
  double t, x, z, z_ref, w, phi, p, theta, q;
  double u1, u2, u3;             // actual fin deflections
  double u1_cmd, u2_cmd, u3_cmd; // zero-order-hold controller commands
  double d_heave, d_roll, d_pitch;
  double surge;
};

struct Trajectory {
  std::vector<TrajectoryRow> rows;
  int physics_hz = 200;

  std::string to_csv() const;
  void write_csv(const std::string& path) const;
};

using ControllerVariant = std::variant<LqrController, PidController>;

// One fourth-order Runge-Kutta step of the vehicle dynamics over [t, t+dt]
// with fins and disturbance held; the tow speed follows surge_fn within the
// step.
BodyState rk4_step(const BodyState& state, const FinDeflections& fins,
                   const GeneralizedForce& disturbance,
                   const VehicleParams& params, const AddedMassCoeffs& coeffs,
                   double t, double dt,
                   const std::function<double(double)>& surge_fn);

// Runs the closed loop: physics at physics_hz, controller at control_hz under
// zero-order hold, servo dynamics every physics tick, disturbance redrawn
// every control period.  The vehicle starts on the reference at trim.  Throws
// DivergedError (with the last valid tick) when the state leaves the model
// envelope or stops being finite.
Trajectory simulate(const Scenario& scenario, const VehicleParams& vehicle,
                    const ServoParams& servo, ControllerVariant controller,
                    std::uint64_t seed);

}  // namespace rotv

#endif  // ROTV_SIM_HPP
