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

#include "rotv/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace rotv {

double GaussianDraws::next() {
  // Map 53 high bits into (0, 1] so the log is always finite.
  auto unit = [this]() {
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  };
  const double u1 = unit();
  const double u2 = unit();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

GeneralizedForce sample_disturbance(GaussianDraws& rng,
                                    const DisturbanceConfig& config) {
  GeneralizedForce d;
  if (!config.enabled) return d;
  d.heave = rng.next() * config.sigma * config.scale[2];
  d.roll = rng.next() * config.sigma * config.scale[3];
  d.pitch = rng.next() * config.sigma * config.scale[4];
  return d;
}

void validate(const Scenario& s) {
  auto fail = [](const std::string& why) { throw ConfigError(why); };
  if (s.course_length < 0.0 || !std::isfinite(s.course_length)) {
    fail("course_length must be >= 0");
  }
  if (!(s.target_surge > 0.0) || !std::isfinite(s.target_surge)) {
    fail("target_surge must be positive");
  }
  if (!(s.initial_surge >= 0.0) || !std::isfinite(s.initial_surge)) {
    fail("initial_surge must be >= 0");
  }
  if (s.ramp_ticks < 0) fail("ramp_ticks must be >= 0");
  if (s.controller_start_tick < 0) fail("controller_start_tick must be >= 0");
  if (s.physics_hz <= 0 || s.control_hz <= 0) {
    fail("physics_hz and control_hz must be positive");
  }
  if (s.physics_hz % s.control_hz != 0) {
    fail("physics_hz must be an integer multiple of control_hz");
  }
  if (!(s.target_altitude > 0.0)) fail("target_altitude must be positive");
  if (!(s.disturbance.sigma >= 0.0)) fail("disturbance sigma must be >= 0");
  if (!(s.metrics_min_x <= s.metrics_max_x)) {
    fail("metrics window is inverted");
  }
}

double surge_at(const Scenario& scenario, double t) {
  if (scenario.ramp_ticks == 0) return scenario.target_surge;
  const double ramp_time =
      static_cast<double>(scenario.ramp_ticks) / scenario.physics_hz;
  const double s = std::clamp(t / ramp_time, 0.0, 1.0);
  return scenario.initial_surge +
         s * (scenario.target_surge - scenario.initial_surge);
}

double reference_depth(const Scenario& scenario, double x, double t) {
  double z_ref = depth_reference(scenario.profile, x, scenario.target_altitude);
  for (const ReferenceStep& step : scenario.ref_steps) {
    if (t >= step.time) z_ref += step.delta;
  }
  return z_ref;
}

std::string Trajectory::to_csv() const {
  std::string out =
      "t,x,z,z_ref,w,phi,p,theta,q,u1,u2,u3,u1_cmd,u2_cmd,u3_cmd,"
      "d_heave,d_roll,d_pitch,surge\n";
  char line[512];
  for (const TrajectoryRow& r : rows) {
    std::snprintf(line, sizeof(line),
                  "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,"
                  "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                  r.t, r.x, r.z, r.z_ref, r.w, r.phi, r.p, r.theta, r.q, r.u1,
                  r.u2, r.u3, r.u1_cmd, r.u2_cmd, r.u3_cmd, r.d_heave,
                  r.d_roll, r.d_pitch, r.surge);
    out += line;
  }
  return out;
}

void Trajectory::write_csv(const std::string& path) const {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open trajectory output file: " + path);
  }
  file << to_csv();
  if (!file) {
    throw IoError("failed to write trajectory to " + path);
  }
}

BodyState rk4_step(const BodyState& state, const FinDeflections& fins,
                   const GeneralizedForce& disturbance,
                   const VehicleParams& params, const AddedMassCoeffs& coeffs,
                   double t, double dt,
                   const std::function<double(double)>& surge_fn) {
  auto eval = [&](const BodyState& s, double time) {
    BodyState at = s;
    at.surge = surge_fn(time);
    return state_derivative(at, fins, disturbance, params, coeffs);
  };
  auto advance = [](const BodyState& s, const StateDerivative& d, double h) {
    BodyState n = s;
    n.x += h * d.x_dot;
    n.z += h * d.z_dot;
    n.w += h * d.w_dot;
    n.phi += h * d.phi_dot;
    n.p += h * d.p_dot;
    n.theta += h * d.theta_dot;
    n.q += h * d.q_dot;
    return n;
  };

  const StateDerivative k1 = eval(state, t);
  const StateDerivative k2 = eval(advance(state, k1, dt / 2), t + dt / 2);
  const StateDerivative k3 = eval(advance(state, k2, dt / 2), t + dt / 2);
  const StateDerivative k4 = eval(advance(state, k3, dt), t + dt);

  BodyState next = state;
  const double h6 = dt / 6.0;
  next.x += h6 * (k1.x_dot + 2 * k2.x_dot + 2 * k3.x_dot + k4.x_dot);
  next.z += h6 * (k1.z_dot + 2 * k2.z_dot + 2 * k3.z_dot + k4.z_dot);
  next.w += h6 * (k1.w_dot + 2 * k2.w_dot + 2 * k3.w_dot + k4.w_dot);
  next.phi += h6 * (k1.phi_dot + 2 * k2.phi_dot + 2 * k3.phi_dot + k4.phi_dot);
  next.p += h6 * (k1.p_dot + 2 * k2.p_dot + 2 * k3.p_dot + k4.p_dot);
  next.theta +=
      h6 * (k1.theta_dot + 2 * k2.theta_dot + 2 * k3.theta_dot + k4.theta_dot);
  next.q += h6 * (k1.q_dot + 2 * k2.q_dot + 2 * k3.q_dot + k4.q_dot);
  next.surge = surge_fn(t + dt);
  return next;
}

namespace {

bool state_ok(const BodyState& s) {
  const double half_pi = std::numbers::pi / 2;
  return std::isfinite(s.x) && std::isfinite(s.z) && std::isfinite(s.w) &&
         std::isfinite(s.phi) && std::isfinite(s.p) &&
         std::isfinite(s.theta) && std::isfinite(s.q) &&
         std::abs(s.phi) < half_pi && std::abs(s.theta) < half_pi &&
         std::abs(s.z) < 1e4 && std::abs(s.w) < 1e3 && std::abs(s.p) < 1e3 &&
         std::abs(s.q) < 1e3;
}

}  // namespace

Trajectory simulate(const Scenario& scenario, const VehicleParams& vehicle,
                    const ServoParams& servo, ControllerVariant controller,
                    std::uint64_t seed) {
  validate(scenario);
  validate(vehicle);
  validate(servo);
  const AddedMassCoeffs coeffs = compute_added_mass_coefficients(vehicle);

  const double dt = 1.0 / scenario.physics_hz;
  const long control_div = scenario.physics_hz / scenario.control_hz;
  const double dt_ctrl = 1.0 / scenario.control_hz;
  auto surge_fn = [&](double t) { return surge_at(scenario, t); };

  BodyState state;
  state.z = reference_depth(scenario, 0.0, 0.0);
  state.surge = surge_fn(0.0);
  FinDeflections fins;   // trim deflections are zero for this vehicle family
  FinDeflections u_cmd;  // zero-order-hold command
  GeneralizedForce disturbance;
  GaussianDraws rng(seed);

  Trajectory traj;
  traj.physics_hz = scenario.physics_hz;
  // Generous cap so a stalled run fails loudly instead of spinning.
  const long tick_cap =
      10 * (scenario.ramp_ticks +
            static_cast<long>(scenario.course_length / scenario.target_surge *
                              scenario.physics_hz)) +
      10 * scenario.physics_hz;

  for (long tick = 0; state.x < scenario.course_length; ++tick) {
    if (tick > tick_cap) {
      throw DivergedError("course did not complete within the tick budget",
                          tick - 1);
    }
    const double t = tick * dt;
    state.surge = surge_fn(t);
    const double z_ref = reference_depth(scenario, state.x, t);

    if (tick % control_div == 0) {
      disturbance = sample_disturbance(rng, scenario.disturbance);
      if (tick >= scenario.controller_start_tick) {
        const ControlCommand cmd = std::visit(
            [&](auto& c) { return c.step(state, z_ref, dt_ctrl); },
            controller);
        u_cmd = cmd.fins;
      }
    }
    servo_step_all(fins, u_cmd, dt, servo);

    traj.rows.push_back({t, state.x, state.z, z_ref, state.w, state.phi,
                         state.p, state.theta, state.q, fins.u1, fins.u2,
                         fins.u3, u_cmd.u1, u_cmd.u2, u_cmd.u3,
                         disturbance.heave, disturbance.roll,
                         disturbance.pitch, state.surge});

    try {
      state = rk4_step(state, fins, disturbance, vehicle, coeffs, t, dt,
                       surge_fn);
    } catch (const DomainError& e) {
      throw DivergedError(
          std::string("simulation diverged at tick ") + std::to_string(tick) +
              ": " + e.what(),
          tick - 1);
    }
    if (!state_ok(state)) {
      throw DivergedError(
          "simulation diverged at tick " + std::to_string(tick),
          tick - 1);
    }
  }
  return traj;
}

}  // namespace rotv
