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

#include "rotv/controllers.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace rotv {
namespace {

ControlCommand saturate(const Eigen::Vector3d& raw, double limit) {
  ControlCommand cmd;
  const Eigen::Vector3d clamped =
      raw.cwiseMax(-limit).cwiseMin(limit);
  cmd.fins = FinDeflections{clamped(0), clamped(1), clamped(2)};
  for (int i = 0; i < 3; ++i) {
    cmd.saturated[i] = std::abs(raw(i)) > limit;
  }
  return cmd;
}

}  // namespace

double anti_windup_update(double integrator, double error, double u_raw,
                          double u_limit, double dt, double integrator_limit) {
  const bool winding_up = (u_raw > u_limit && error > 0.0) ||
                          (u_raw < -u_limit && error < 0.0);
  if (winding_up) return integrator;
  return std::clamp(integrator + error * dt, -integrator_limit,
                    integrator_limit);
}

LqrController::LqrController(GainSchedule schedule, LqrSettings settings)
    : schedule_(std::move(schedule)), settings_(settings) {
  if (schedule_.entries.empty()) {
    throw SynthesisError("LQR controller needs a non-empty gain schedule");
  }
}

ControlCommand LqrController::step(const BodyState& state, double z_ref,
                                   double dt) {
  const Matrix36 k = schedule_.gain_at(state.surge);
  const double depth_error = state.z - z_ref;

  Vector6 e;
  e << depth_error + settings_.ki_depth * depth_integrator_, state.w,
      state.phi, state.p, state.theta, state.q;
  const Eigen::Vector3d u_raw = -k * e;
  const ControlCommand cmd = saturate(u_raw, settings_.deflection_limit);

  if (settings_.anti_windup) {
    // Conditional integration: transients larger than the capture band must
    // not charge the integral (the charge would unwind at ki_depth and hold
    // the depth off the reference long after the step).  Inside the band,
    // gate on the tail channel, oriented so that a positive gated value
    // means the integral is pushing deeper into the saturation bound.
    if (std::abs(depth_error) <= settings_.capture_band) {
      const double direction = -k(2, 0) >= 0.0 ? 1.0 : -1.0;
      depth_integrator_ = anti_windup_update(
          depth_integrator_, depth_error, u_raw(2) * direction,
          settings_.deflection_limit, dt, settings_.integrator_limit);
    }
  } else {
    depth_integrator_ =
        std::clamp(depth_integrator_ + depth_error * dt,
                   -settings_.integrator_limit, settings_.integrator_limit);
  }
  return cmd;
}

void LqrController::reset() { depth_integrator_ = 0.0; }

PidController::PidController(PidSettings settings)
    : settings_(std::move(settings)) {
  if (!(settings_.deflection_limit > 0.0) ||
      !(settings_.integrator_limit > 0.0) ||
      !(settings_.capture_band > 0.0) ||
      !(settings_.deriv_filter_tau >= 0.0)) {
    throw ParamError("PID limits and filter constant must be positive");
  }
}

double PidController::axis_step(const PidGains& gains, AxisState& axis,
                                double error, double dt) {
  if (!axis.primed) {
    axis.prev_error = error;
    axis.primed = true;
  }
  const double deriv_raw = (error - axis.prev_error) / dt;
  const double blend = dt / (settings_.deriv_filter_tau + dt);
  axis.deriv_filt += blend * (deriv_raw - axis.deriv_filt);

  // Trapezoidal integral, pre-scaled by Ki so the stored value is in command
  // units; gated by the provisional output when anti-windup is active.
  const double incr = gains.ki * 0.5 * (error + axis.prev_error);
  const double provisional =
      gains.kp * error + axis.integrator + gains.kd * axis.deriv_filt;
  if (settings_.anti_windup) {
    // Conditional integration, as in the scheduled controller: large
    // transient errors are not allowed to charge the integral.
    if (std::abs(error) <= settings_.capture_band) {
      axis.integrator =
          anti_windup_update(axis.integrator, incr, provisional,
                             settings_.deflection_limit, dt,
                             settings_.integrator_limit);
    }
  } else {
    axis.integrator = std::clamp(axis.integrator + incr * dt,
                                 -settings_.integrator_limit,
                                 settings_.integrator_limit);
  }
  axis.prev_error = error;
  return gains.kp * error + axis.integrator + gains.kd * axis.deriv_filt;
}

ControlCommand PidController::step(const BodyState& state, double z_ref,
                                   double dt) {
  const double e_depth = z_ref - state.z;
  const double e_roll = -state.phi;
  const double e_pitch = -state.theta;

  Eigen::Vector3d axis_cmd;
  axis_cmd(0) = axis_step(settings_.depth, depth_, e_depth, dt);
  axis_cmd(1) = axis_step(settings_.roll, roll_, e_roll, dt);
  axis_cmd(2) = axis_step(settings_.pitch, pitch_, e_pitch, dt);

  const Eigen::Vector3d u_raw = settings_.mixing * axis_cmd;
  return saturate(u_raw, settings_.deflection_limit);
}

void PidController::reset() {
  depth_ = AxisState{};
  roll_ = AxisState{};
  pitch_ = AxisState{};
}

std::array<double, 3> PidController::integrators() const {
  return {depth_.integrator, roll_.integrator, pitch_.integrator};
}

}  // namespace rotv
