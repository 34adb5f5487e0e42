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

#ifndef ROTV_LINCONTROL_HPP
#define ROTV_LINCONTROL_HPP

#include <string>
#include <vector>

#include "rotv/params.hpp"
#include "rotv/types.hpp"

namespace rotv {

// Linear model x_dot = A x + B u around a trim point, with the state ordered
// [z, z_dot, phi, phi_dot, theta, theta_dot] and inputs [u1, u2, u3].  The
// full state is measured, so C is the identity.
struct StateSpace {
  Matrix6 a = Matrix6::Zero();
  Matrix63 b = Matrix63::Zero();
  Matrix6 c = Matrix6::Identity();
  double surge = 0.0;
};

// Level-flight equilibrium at a given tow speed.
struct TrimPoint {
  BodyState state;
  FinDeflections fins;
  double residual = 0.0;  // max |active-axis acceleration| at the trim
};

// Finds pitch, collective forward flap and tail flap such that the heave and
// pitch accelerations vanish (roll is balanced by symmetry).  Solved by a
// damped minimum-norm Gauss-Newton iteration; throws SynthesisError when the
// residual cannot be brought below 1e-10.
TrimPoint trim_state(double surge, const VehicleParams& params);

// Jacobians of the reduced dynamics at the trim point, by central finite
// differences with step halving (Richardson consistency check).  Throws
// SynthesisError when the two step sizes disagree.
StateSpace linearize(double surge, const VehicleParams& params);

// Quadratic cost weights for gain synthesis, as diagonals.
struct LqrWeights {
  Vector6 q_diag = (Vector6() << 500, 30, 20, 10, 50, 30).finished();
  Eigen::Vector3d r_diag = Eigen::Vector3d(11, 11, 19);
};

// State-feedback gain K = R^{-1} B^T P for one operating point; verifies the
// closed loop is Hurwitz.
Matrix36 lqr_gain(const StateSpace& model, const LqrWeights& weights);

// Gains tabulated over tow speed with elementwise linear interpolation,
// clamped to the end entries outside the covered range.
struct GainSchedule {
  struct Entry {
    double surge = 0.0;
    Matrix36 gain = Matrix36::Zero();
  };
  std::vector<Entry> entries;
  // Populated when an interpolated mid-velocity gain fails to stabilize the
  // mid-velocity linearization; callers surface these rather than ignore.
  std::vector<std::string> warnings;

  Matrix36 gain_at(double surge) const;
};

// Builds the schedule by running trim -> linearize -> Riccati at each speed
// (ascending, all positive) and then checks every adjacent pair at the
// midpoint velocity.
GainSchedule build_gain_schedule(const std::vector<double>& speeds,
                                 const LqrWeights& weights,
                                 const VehicleParams& params);

}  // namespace rotv

#endif  // ROTV_LINCONTROL_HPP
