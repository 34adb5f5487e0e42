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

#ifndef ROTV_VEHICLE_HPP
#define ROTV_VEHICLE_HPP

#include "rotv/params.hpp"
#include "rotv/types.hpp"

namespace rotv {

// Hull + wing added mass from strip theory.  The hull contribution is the
// composite-Simpson quadrature of pi*rho*r(x)^2 (heave) and pi*rho*x^2*r(x)^2
// (pitch) over the radius table; each wing pair adds its plate term.
AddedMassCoeffs compute_added_mass_coefficients(const VehicleParams& params);

// Rigid-body plus added-mass 6x6 inertia.  Symmetric positive definite for
// valid parameters.
Matrix6 assemble_total_inertia(const VehicleParams& params,
                               const AddedMassCoeffs& coeffs);

// Full 6x6 added-mass Coriolis matrix C_A(nu); skew-symmetric for every nu
// (ordered surge, sway, heave, roll, pitch, yaw).
Matrix6 added_mass_coriolis_matrix(const Vector6& nu,
                                   const AddedMassCoeffs& coeffs);

// C_A(nu)*nu for the towed motion (v = r = 0), reduced to the active axes:
// only the pitch moment Z_wdot*w*U survives.
GeneralizedForce coriolis_added_force(const BodyState& state,
                                      const AddedMassCoeffs& coeffs);

// Rigid-body Coriolis/centripetal force for the towed motion, reduced to the
// active axes: heave -U*m*q, roll q*(I_yz*q - I_xz*p), pitch
// p*(I_yz*q + I_xz*p).
GeneralizedForce coriolis_rigid_force(const BodyState& state,
                                      const VehicleParams& params);

// Resistive damping force D(nu)*nu with D = diag of linear plus quadratic
// coefficients.  Returned unsigned; the assembly subtracts it.
GeneralizedForce damping_force(const BodyState& state,
                               const VehicleParams& params);

// Lift coefficient of a plate section at attack angle alpha in DEGREES,
// C_L = alpha / 8, valid to +-8 degrees.  Outside that range the value is
// clamped; *clamped (when non-null) reports whether clamping occurred.
double lift_coefficient(double alpha_deg, bool* clamped = nullptr);

// Lift force 0.5 * rho * C_L * S * U^2 of one surface, N.
double lift_force(double c_l, double area, double surge,
                  const VehicleParams& params);

// Attack angles of the lifting sections.  Fixed sections ride at the pitch
// angle; flap sections see beta = theta - u.
struct AttackAngles {
  double fixed = 0.0;   // fixed forward sections, rad
  double left = 0.0;    // left flap, rad
  double right = 0.0;   // right flap, rad
  double tail = 0.0;    // tail flap, rad
};
AttackAngles effective_attack_angles(double theta, const FinDeflections& fins);

// Cable drag restoring moment 0.5*rho*C_D*A*U^2*sin(theta)*cable_arm, N*m.
// Positive for positive pitch; the assembly subtracts it so it always acts
// against the pitch excursion.
double cable_restoring_moment(const BodyState& state,
                              const VehicleParams& params);

// Pure lift loads of the four surface groups on heave/roll/pitch (no damping,
// Coriolis or cable terms).
GeneralizedForce lift_control_force(const BodyState& state,
                                    const FinDeflections& fins,
                                    const VehicleParams& params);

// Closed-form totals of the three active-axis equations of motion: lift,
// damping, Coriolis and cable terms folded into one scalar expression per
// axis.  Must agree with generalized_rhs() to machine-level accuracy; the
// tests hold the two routes against each other.
struct ActiveTorques {
  double heave = 0.0;  // N
  double roll = 0.0;   // N*m
  double pitch = 0.0;  // N*m
};
ActiveTorques control_torques(const BodyState& state,
                              const FinDeflections& fins,
                              const VehicleParams& params,
                              const AddedMassCoeffs& coeffs);

// Matrix-form assembly of the right-hand side: lift - rigid Coriolis - added
// Coriolis - damping - cable restoring + disturbance.
GeneralizedForce generalized_rhs(const BodyState& state,
                                 const FinDeflections& fins,
                                 const GeneralizedForce& disturbance,
                                 const VehicleParams& params,
                                 const AddedMassCoeffs& coeffs);

// Equations of motion restricted to the active axes: solves the 3x3 heave/
// roll/pitch block of the total inertia for the accelerations and appends the
// kinematic rates.  Throws DomainError for states outside the model envelope.
StateDerivative state_derivative(const BodyState& state,
                                 const FinDeflections& fins,
                                 const GeneralizedForce& disturbance,
                                 const VehicleParams& params,
                                 const AddedMassCoeffs& coeffs);

}  // namespace rotv

#endif  // ROTV_VEHICLE_HPP
