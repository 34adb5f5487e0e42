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

#ifndef ROTV_TYPES_HPP
#define ROTV_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace rotv {

using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Matrix63 = Eigen::Matrix<double, 6, 3>;
using Matrix36 = Eigen::Matrix<double, 3, 6>;

// ---------------------------------------------------------------------------
// Errors.  The C boundary maps these onto numeric status codes; inside the
// core we keep ordinary exceptions.
// ---------------------------------------------------------------------------

// Invalid physical parameters (non-positive mass, indefinite inertia, ...).
class ParamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration input (bad key, bad literal, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical synthesis step failed (trim search, Riccati solve, schedule).
class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// State left the validity envelope of the model.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The time integration blew up; remembers the last tick that was still good.
class DivergedError : public std::runtime_error {
 public:
  DivergedError(const std::string& what, long last_valid_tick)
      : std::runtime_error(what), last_valid_tick_(last_valid_tick) {}
  long last_valid_tick() const { return last_valid_tick_; }

 private:
  long last_valid_tick_ = -1;
};

// ---------------------------------------------------------------------------
// Kinematic / dynamic value types.
// ---------------------------------------------------------------------------

// Force/moment pair on all six body axes, ordered surge, sway, heave, roll,
// pitch, yaw.  Producers in this library constrain sway and yaw to zero; the
// fields exist so assemblies read like the full-rank equations they come from.
struct GeneralizedForce {
  double surge = 0.0;  // N
  double sway = 0.0;   // N
  double heave = 0.0;  // N
  double roll = 0.0;   // N*m
  double pitch = 0.0;  // N*m
  double yaw = 0.0;    // N*m

  Vector6 vec() const {
    Vector6 v;
    v << surge, sway, heave, roll, pitch, yaw;
    return v;
  }

  GeneralizedForce& operator+=(const GeneralizedForce& o) {
    surge += o.surge;
    sway += o.sway;
    heave += o.heave;
    roll += o.roll;
    pitch += o.pitch;
    yaw += o.yaw;
    return *this;
  }
};

// Reduced vehicle state: depth/heave, roll, pitch plus along-track position
// and the tow speed that parameterizes every hydrodynamic term.
//
// NED convention: z is depth, positive down; w = dz/dt.  Roll phi and pitch
// theta are radians and must stay inside (-pi/2, pi/2) for the model to hold.
struct BodyState {
  double x = 0.0;      // along-track position, m
  double z = 0.0;      // depth, m (positive down)
  double w = 0.0;      // heave rate, m/s
  double phi = 0.0;    // roll angle, rad
  double p = 0.0;      // roll rate, rad/s
  double theta = 0.0;  // pitch angle, rad
  double q = 0.0;      // pitch rate, rad/s
  double surge = 0.0;  // tow speed U, m/s (>= 0)
};

// Throws DomainError if the state is non-finite or outside the small-angle
// envelope the hydrodynamic model is valid for.
void validate(const BodyState& state);

// Deflections of the three active control surfaces, radians: left forward
// flap, right forward flap, tail flap.
struct FinDeflections {
  double u1 = 0.0;
  double u2 = 0.0;
  double u3 = 0.0;

  Eigen::Vector3d vec() const { return {u1, u2, u3}; }
};

// Time derivative of BodyState as produced by the equations of motion.
struct StateDerivative {
  double x_dot = 0.0;
  double z_dot = 0.0;
  double w_dot = 0.0;
  double phi_dot = 0.0;
  double p_dot = 0.0;
  double theta_dot = 0.0;
  double q_dot = 0.0;
};

}  // namespace rotv

#endif  // ROTV_TYPES_HPP
