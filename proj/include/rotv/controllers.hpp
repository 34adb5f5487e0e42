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

#ifndef ROTV_CONTROLLERS_HPP
#define ROTV_CONTROLLERS_HPP

#include <array>

#include "rotv/lincontrol.hpp"
#include "rotv/types.hpp"

namespace rotv {

// Fin commands after saturation, with per-channel saturation flags.
struct ControlCommand {
  FinDeflections fins;
  std::array<bool, 3> saturated = {false, false, false};
};

// Conditional-integration anti-windup.  Accumulates integrator + error * dt
// (clamped to +-integrator_limit) unless the raw output sits beyond the
// output limit on the same side the error keeps pushing; integration resumes
// as soon as the error changes sign or the output returns inside the limits.
double anti_windup_update(double integrator, double error, double u_raw,
                          double u_limit, double dt, double integrator_limit);

// Gain-scheduled state feedback u = -K(U) e with an outer integrator on the
// depth error folded into the depth channel of e.
//
// With anti_windup on, the integrator uses conditional integration: it only
// accumulates while the depth error is inside capture_band (so reference
// transients cannot charge it and drag a slow tail behind every step) and
// while the tail channel is not saturated in the direction the error pushes.
struct LqrSettings {
  double ki_depth = 0.3;          // 1/s, outer depth-integral gain
  double integrator_limit = 2.0;  // m*s
  double capture_band = 0.05;     // m, |error| window where integration runs
  double deflection_limit = 20.0 * 0.017453292519943295;  // rad
  bool anti_windup = true;
};

class LqrController {
 public:
  LqrController(GainSchedule schedule, LqrSettings settings);

  // One control update at tow speed state.surge.  Roll/pitch references are
  // zero; dt is the controller period.
  ControlCommand step(const BodyState& state, double z_ref, double dt);

  void reset();
  double depth_integrator() const { return depth_integrator_; }
  const GainSchedule& schedule() const { return schedule_; }

 private:
  GainSchedule schedule_;
  LqrSettings settings_;
  double depth_integrator_ = 0.0;
};

// One PID loop: proportional + Ki-scaled trapezoidal integral + filtered
// backward-difference derivative.
struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
};

// Three single-axis PID loops (depth, roll, pitch) mixed onto the fins:
// depth drives the forward flaps collectively with a partial tail assist,
// roll drives the forward flaps differentially, pitch drives the tail.
// The tail assist entry is deliberately modest: a full-strength collective
// tail command torques the vehicle hard during depth transients and the
// depth response then drags behind the slower pitch-recovery dynamics.
//
// With anti_windup on, each axis integrator uses the same conditional
// integration as the scheduled controller: it accumulates only while that
// axis error is inside capture_band (m for depth, rad for roll/pitch) and
// the axis output is not saturated in the direction the error pushes.
struct PidSettings {
  PidGains depth{3.3, 1.0, 0.33};
  PidGains roll{1.2, 0.1, 0.15};
  PidGains pitch{3.0, 0.3, 0.4};
  // Columns are the depth/roll/pitch axis commands, rows the fins u1,u2,u3.
  Eigen::Matrix3d mixing = (Eigen::Matrix3d() <<  //
                            -1.0, -1.0, 0.0,      //
                            -1.0, 1.0, 0.0,       //
                            -0.25, 0.0, 1.0)
                               .finished();
  double deriv_filter_tau = 0.05;  // s, derivative low-pass time constant
  double integrator_limit = 20.0 * 0.017453292519943295;  // rad of command
  double capture_band = 0.05;  // error units, integration window per axis
  double deflection_limit = 20.0 * 0.017453292519943295;  // rad
  bool anti_windup = true;
};

class PidController {
 public:
  explicit PidController(PidSettings settings);

  // One control update; axis errors are reference minus measurement.
  ControlCommand step(const BodyState& state, double z_ref, double dt);

  void reset();
  // Ki-scaled integrator values for the depth/roll/pitch axes.
  std::array<double, 3> integrators() const;

 private:
  struct AxisState {
    double integrator = 0.0;
    double prev_error = 0.0;
    double deriv_filt = 0.0;
    bool primed = false;
  };
  double axis_step(const PidGains& gains, AxisState& axis, double error,
                   double dt);

  PidSettings settings_;
  AxisState depth_, roll_, pitch_;
};

}  // namespace rotv

#endif  // ROTV_CONTROLLERS_HPP
