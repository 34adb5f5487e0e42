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

#ifndef ROTV_PARAMS_HPP
#define ROTV_PARAMS_HPP

#include <array>
#include <utility>
#include <vector>

#include "rotv/types.hpp"

namespace rotv {

// Physical description of the towed vehicle.  All values SI, angles radians.
//
// The hull is a body of revolution described by a piecewise-linear radius
// table r(x) with x measured from the center of mass (positive forward).
// Wings and flaps are thin plates; per-surface areas S_1..S_4 and pitch
// moment arms d_1..d_4 are signed with the same x-forward convention, so a
// surface behind the center of mass carries a negative arm.
struct VehicleParams {
  double mass = 40.0;  // kg

  // Rigid-body inertia tensor about the body axes, kg*m^2.
  double I_x = 1.5;
  double I_y = 5.0;
  double I_z = 5.5;
  double I_xy = 0.0;
  double I_xz = 0.0;
  double I_yz = 0.0;

  double body_length = 1.22;  // m

  // Hull radius samples (x, r) ordered by increasing x, meters.
  std::vector<std::pair<double, double>> r_profile = {
      {-0.61, 0.0},  {-0.488, 0.0522}, {-0.366, 0.0810}, {-0.244, 0.0900},
      {-0.122, 0.0900}, {0.0, 0.0900}, {0.122, 0.0900},  {0.244, 0.0900},
      {0.366, 0.0810},  {0.488, 0.0522}, {0.61, 0.0}};

  // Wing plate dimensions used by the added-mass strip terms, m.
  double fw_chord = 0.12;
  double fw_span = 0.45;
  double tw_chord = 0.10;
  double tw_span = 0.40;

  // Empirical added-mass correction factors for the wing plates.
  double k_trans_fw = 1.0;
  double k_trans_tw = 1.0;
  double k_rot_fw = 1.0;
  double k_rot_tw = 1.0;

  // Lifting surface areas, m^2: S_1 inner fixed section, S_2 flap and S_3
  // outer fixed section of one forward wing, S_4 tail plane.  Sized so the
  // fin authority keeps the sampled 50 Hz feedback loop well inside its
  // stability margin across the 1-5 m/s tow-speed range.
  std::array<double, 4> wing_areas = {0.001, 0.007, 0.001, 0.006};

  // Pitch moment arms d_1..d_4 of those surfaces, m (signed, x forward).
  // The forward wing sits at the mass center so flap lift changes depth
  // without torquing pitch; the tail plane alone commands pitch.
  std::array<double, 4> moment_arms = {0.0, 0.0, 0.0, -0.40};

  // Roll moment arm of a forward flap's center of pressure, m.
  double flap_lateral_offset = 0.15;

  double fluid_density = 1000.0;  // kg/m^3

  // Tow-cable drag surrogate: frontal area, drag coefficient and the lever
  // arm of the cable attachment ahead of the center of mass.
  double frontal_area = 0.0254;  // m^2
  double drag_coeff = 0.6;
  double cable_arm = 0.5;  // m

  // Hydrodynamic damping, linear and quadratic, for heave/roll/pitch.
  double Z_w = 150.0;  // N*s/m
  double K_p = 5.0;    // N*m*s
  double M_q = 20.0;   // N*m*s
  double Z_ww = 40.0;  // N*s^2/m^2
  double K_pp = 10.0;  // N*m*s^2
  double M_qq = 30.0;  // N*m*s^2

  // Lift-coefficient slope of 1/8 is per DEGREE of attack angle when true
  // (the plate data this model is built on), per radian when false.
  bool lift_slope_per_degree = true;

  // Panel count for the hull added-mass quadrature (even, >= 2).
  int quadrature_panels = 256;
};

// Throws ParamError when a field is non-finite or violates its contract
// (positive mass/density, SPD inertia tensor, ordered radius table, ...).
void validate(const VehicleParams& params);

// Added-mass coefficients, stored as positive magnitudes and added to the
// rigid-body terms when the total inertia matrix is assembled.
struct AddedMassCoeffs {
  double Z_wdot = 0.0;  // heave, kg
  double K_pdot = 0.0;  // roll, kg*m^2
  double M_qdot = 0.0;  // pitch, kg*m^2
};

// Lift-coefficient slope per radian implied by params.lift_slope_per_degree.
double lift_slope(const VehicleParams& params);

}  // namespace rotv

#endif  // ROTV_PARAMS_HPP
