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

#include "rotv/vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <sstream>

namespace rotv {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxAttackDeg = 8.0;

bool all_finite(std::initializer_list<double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

// Piecewise-linear hull radius at station x (x within the table range).
double hull_radius(const std::vector<std::pair<double, double>>& table,
                   double x) {
  if (x <= table.front().first) return table.front().second;
  if (x >= table.back().first) return table.back().second;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (x <= table[i].first) {
      const auto& [x0, r0] = table[i - 1];
      const auto& [x1, r1] = table[i];
      const double s = (x - x0) / (x1 - x0);
      return r0 + s * (r1 - r0);
    }
  }
  return table.back().second;
}

// Composite Simpson rule with n (even) panels.
template <typename F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

}  // namespace

void validate(const BodyState& state) {
  if (!all_finite({state.x, state.z, state.w, state.phi, state.p, state.theta,
                   state.q, state.surge})) {
    throw DomainError("body state contains a non-finite value");
  }
  if (std::abs(state.phi) >= kPi / 2 || std::abs(state.theta) >= kPi / 2) {
    std::ostringstream msg;
    msg << "attitude outside model envelope: phi=" << state.phi
        << " theta=" << state.theta << " (|angle| must stay below pi/2)";
    throw DomainError(msg.str());
  }
  if (state.surge < 0.0) {
    throw DomainError("tow speed must be non-negative");
  }
}

void validate(const VehicleParams& p) {
  auto fail = [](const std::string& why) { throw ParamError(why); };

  if (!std::isfinite(p.mass) || p.mass <= 0.0) fail("mass must be positive");
  if (!std::isfinite(p.fluid_density) || p.fluid_density <= 0.0) {
    fail("fluid_density must be positive");
  }
  if (!std::isfinite(p.body_length) || p.body_length <= 0.0) {
    fail("body_length must be positive");
  }
  if (!all_finite({p.I_x, p.I_y, p.I_z, p.I_xy, p.I_xz, p.I_yz})) {
    fail("inertia tensor contains a non-finite value");
  }
  Eigen::Matrix3d inertia;
  inertia << p.I_x, -p.I_xy, -p.I_xz,  //
      -p.I_xy, p.I_y, -p.I_yz,         //
      -p.I_xz, -p.I_yz, p.I_z;
  Eigen::LLT<Eigen::Matrix3d> llt(inertia);
  if (llt.info() != Eigen::Success) {
    fail("inertia tensor must be symmetric positive definite");
  }

  if (p.r_profile.size() < 2) fail("r_profile needs at least two samples");
  for (std::size_t i = 0; i < p.r_profile.size(); ++i) {
    const auto& [x, r] = p.r_profile[i];
    if (!std::isfinite(x) || !std::isfinite(r)) {
      fail("r_profile contains a non-finite sample");
    }
    if (r < 0.0) fail("r_profile radius samples must be non-negative");
    if (i > 0 && x <= p.r_profile[i - 1].first) {
      fail("r_profile stations must be strictly increasing");
    }
  }

  for (double v : {p.fw_chord, p.fw_span, p.tw_chord, p.tw_span}) {
    if (!std::isfinite(v) || v < 0.0) fail("wing dimensions must be >= 0");
  }
  for (double v : {p.k_trans_fw, p.k_trans_tw, p.k_rot_fw, p.k_rot_tw}) {
    if (!std::isfinite(v) || v < 0.0) {
      fail("added-mass correction factors must be >= 0");
    }
  }
  for (double s : p.wing_areas) {
    if (!std::isfinite(s) || s < 0.0) fail("wing_areas must be >= 0");
  }
  for (double d : p.moment_arms) {
    if (!std::isfinite(d)) fail("moment_arms must be finite");
  }
  if (!std::isfinite(p.flap_lateral_offset)) {
    fail("flap_lateral_offset must be finite");
  }
  if (!std::isfinite(p.frontal_area) || p.frontal_area < 0.0) {
    fail("frontal_area must be >= 0");
  }
  if (!std::isfinite(p.drag_coeff) || p.drag_coeff < 0.0) {
    fail("drag_coeff must be >= 0");
  }
  if (!std::isfinite(p.cable_arm) || p.cable_arm < 0.0) {
    fail("cable_arm must be >= 0");
  }
  for (double v : {p.Z_w, p.K_p, p.M_q, p.Z_ww, p.K_pp, p.M_qq}) {
    if (!std::isfinite(v) || v < 0.0) {
      fail("damping coefficients must be >= 0");
    }
  }
  if (p.quadrature_panels < 2 || p.quadrature_panels % 2 != 0) {
    fail("quadrature_panels must be an even number >= 2");
  }
}

double lift_slope(const VehicleParams& params) {
  const double per_deg = 1.0 / 8.0;
  return params.lift_slope_per_degree ? per_deg * 180.0 / kPi : per_deg;
}

AddedMassCoeffs compute_added_mass_coefficients(const VehicleParams& params) {
  validate(params);
  const double rho = params.fluid_density;

  const double a = params.r_profile.front().first;
  const double b = params.r_profile.back().first;
  auto heave_integrand = [&](double x) {
    const double r = hull_radius(params.r_profile, x);
    return kPi * rho * r * r;
  };
  auto pitch_integrand = [&](double x) {
    const double r = hull_radius(params.r_profile, x);
    return kPi * rho * x * x * r * r;
  };

  const double fw3 = std::pow(params.fw_span, 3);
  const double tw3 = std::pow(params.tw_span, 3);
  const double fw_c2 = params.fw_chord * params.fw_chord;
  const double tw_c2 = params.tw_chord * params.tw_chord;

  const double wing_trans =
      2.0 * (params.k_trans_fw * kPi * rho * fw_c2 * fw3 / 4.0 +
             params.k_trans_tw * kPi * rho * tw_c2 * tw3 / 4.0);
  const double wing_rot =
      2.0 * (params.k_rot_fw * kPi * rho * fw_c2 * fw3 / 48.0 +
             params.k_rot_tw * kPi * rho * tw_c2 * tw3 / 48.0);

  AddedMassCoeffs coeffs;
  coeffs.Z_wdot =
      simpson(heave_integrand, a, b, params.quadrature_panels) + wing_trans;
  coeffs.K_pdot = wing_rot;
  coeffs.M_qdot =
      simpson(pitch_integrand, a, b, params.quadrature_panels) + wing_rot;
  return coeffs;
}

Matrix6 assemble_total_inertia(const VehicleParams& p,
                               const AddedMassCoeffs& c) {
  Matrix6 m = Matrix6::Zero();
  m(0, 0) = p.mass;
  m(1, 1) = p.mass;
  m(2, 2) = p.mass + c.Z_wdot;
  m(3, 3) = p.I_x + c.K_pdot;
  m(4, 4) = p.I_y + c.M_qdot;
  m(5, 5) = p.I_z;
  m(3, 4) = m(4, 3) = -p.I_xy;
  m(3, 5) = m(5, 3) = -p.I_xz;
  m(4, 5) = m(5, 4) = -p.I_yz;
  return m;
}

Matrix6 added_mass_coriolis_matrix(const Vector6& nu,
                                   const AddedMassCoeffs& c) {
  const double w = nu(2), p = nu(3), q = nu(4);
  Matrix6 ca = Matrix6::Zero();
  ca(0, 4) = -c.Z_wdot * w;
  ca(1, 3) = c.Z_wdot * w;
  ca(3, 1) = -c.Z_wdot * w;
  ca(3, 5) = c.M_qdot * q;
  ca(4, 0) = c.Z_wdot * w;
  ca(4, 5) = -c.K_pdot * p;
  ca(5, 3) = -c.M_qdot * q;
  ca(5, 4) = c.K_pdot * p;
  return ca;
}

GeneralizedForce coriolis_added_force(const BodyState& state,
                                      const AddedMassCoeffs& coeffs) {
  GeneralizedForce f;
  f.pitch = coeffs.Z_wdot * state.w * state.surge;
  return f;
}

GeneralizedForce coriolis_rigid_force(const BodyState& state,
                                      const VehicleParams& params) {
  const double p = state.p, q = state.q;
  GeneralizedForce f;
  f.heave = -state.surge * params.mass * q;
  f.roll = q * (params.I_yz * q - params.I_xz * p);
  f.pitch = p * (params.I_yz * q + params.I_xz * p);
  return f;
}

GeneralizedForce damping_force(const BodyState& state,
                               const VehicleParams& params) {
  GeneralizedForce f;
  f.heave = (params.Z_w + params.Z_ww * std::abs(state.w)) * state.w;
  f.roll = (params.K_p + params.K_pp * std::abs(state.p)) * state.p;
  f.pitch = (params.M_q + params.M_qq * std::abs(state.q)) * state.q;
  return f;
}

double lift_coefficient(double alpha_deg, bool* clamped) {
  bool outside = std::abs(alpha_deg) > kMaxAttackDeg;
  if (clamped != nullptr) *clamped = outside;
  const double a = std::clamp(alpha_deg, -kMaxAttackDeg, kMaxAttackDeg);
  return a / 8.0;
}

double lift_force(double c_l, double area, double surge,
                  const VehicleParams& params) {
  return 0.5 * params.fluid_density * c_l * area * surge * surge;
}

AttackAngles effective_attack_angles(double theta,
                                     const FinDeflections& fins) {
  AttackAngles a;
  a.fixed = theta;
  a.left = theta - fins.u1;
  a.right = theta - fins.u2;
  a.tail = theta - fins.u3;
  return a;
}

double cable_restoring_moment(const BodyState& state,
                              const VehicleParams& params) {
  const double drag = 0.5 * params.fluid_density * params.drag_coeff *
                      params.frontal_area * state.surge * state.surge;
  return drag * std::sin(state.theta) * params.cable_arm;
}

GeneralizedForce lift_control_force(const BodyState& state,
                                    const FinDeflections& fins,
                                    const VehicleParams& params) {
  const AttackAngles beta = effective_attack_angles(state.theta, fins);
  const double sigma = lift_slope(params);
  const double scale = params.fluid_density * state.surge * state.surge * sigma;
  const auto& s = params.wing_areas;
  const auto& d = params.moment_arms;

  GeneralizedForce f;
  // Both wings carry the fixed sections and a flap; the tail plane is single.
  f.heave = scale * (beta.fixed * (s[0] + s[2]) + beta.tail * s[3] +
                     0.5 * s[1] * (beta.left + beta.right));
  f.roll = scale * 0.5 * s[1] * params.flap_lateral_offset *
           (beta.left - beta.right);
  f.pitch = scale * (beta.fixed * (s[0] * d[0] + s[2] * d[2]) +
                     0.5 * s[1] * d[1] * (beta.left + beta.right) +
                     beta.tail * s[3] * d[3]);
  return f;
}

ActiveTorques control_torques(const BodyState& state,
                              const FinDeflections& fins,
                              const VehicleParams& params,
                              const AddedMassCoeffs& coeffs) {
  const double U = state.surge;
  const double w = state.w, p = state.p, q = state.q, theta = state.theta;
  const double rho = params.fluid_density;
  const double sigma = lift_slope(params);
  const double s1 = params.wing_areas[0], s2 = params.wing_areas[1];
  const double s3 = params.wing_areas[2], s4 = params.wing_areas[3];
  const double d1 = params.moment_arms[0], d2 = params.moment_arms[1];
  const double d3 = params.moment_arms[2], d4 = params.moment_arms[3];
  const double beta_l = theta - fins.u1;
  const double beta_r = theta - fins.u2;
  const double beta_t = theta - fins.u3;
  const double uu = U * U;

  ActiveTorques tau;
  tau.heave = rho * uu * sigma * theta * (s1 + s3)            // fixed sections
              + rho * uu * sigma * beta_t * s4                // tail plane
              + 0.5 * rho * uu * sigma * s2 * (beta_l + beta_r)  // flaps
              - (params.Z_w + params.Z_ww * std::abs(w)) * w
              + U * params.mass * q;

  tau.roll = 0.5 * rho * uu * sigma * s2 * params.flap_lateral_offset *
                 (beta_l - beta_r)
             - (params.K_p + params.K_pp * std::abs(p)) * p
             - q * (params.I_yz * q - params.I_xz * p);

  tau.pitch = rho * uu * sigma * theta * (s1 * d1 + s3 * d3)
              + 0.5 * rho * uu * sigma * s2 * d2 * (beta_l + beta_r)
              + rho * uu * sigma * beta_t * s4 * d4
              - (params.M_q + params.M_qq * std::abs(q)) * q
              - 0.5 * rho * params.drag_coeff * params.frontal_area * uu *
                    std::sin(theta) * params.cable_arm
              - p * (params.I_yz * q + params.I_xz * p)
              - coeffs.Z_wdot * w * U;
  return tau;
}

GeneralizedForce generalized_rhs(const BodyState& state,
                                 const FinDeflections& fins,
                                 const GeneralizedForce& disturbance,
                                 const VehicleParams& params,
                                 const AddedMassCoeffs& coeffs) {
  const GeneralizedForce lift = lift_control_force(state, fins, params);
  const GeneralizedForce crb = coriolis_rigid_force(state, params);
  const GeneralizedForce ca = coriolis_added_force(state, coeffs);
  const GeneralizedForce damp = damping_force(state, params);
  const double cable = cable_restoring_moment(state, params);

  GeneralizedForce rhs;
  rhs.heave = lift.heave - crb.heave - ca.heave - damp.heave + disturbance.heave;
  rhs.roll = lift.roll - crb.roll - ca.roll - damp.roll + disturbance.roll;
  rhs.pitch = lift.pitch - crb.pitch - ca.pitch - damp.pitch - cable +
              disturbance.pitch;
  return rhs;
}

StateDerivative state_derivative(const BodyState& state,
                                 const FinDeflections& fins,
                                 const GeneralizedForce& disturbance,
                                 const VehicleParams& params,
                                 const AddedMassCoeffs& coeffs) {
  validate(state);

  const GeneralizedForce rhs =
      generalized_rhs(state, fins, disturbance, params, coeffs);
  const Matrix6 m = assemble_total_inertia(params, coeffs);

  // Heave/roll/pitch block of the total inertia (sway and yaw are towed
  // constraints and drop out together with their columns).
  Eigen::Matrix3d m_act;
  m_act << m(2, 2), m(2, 3), m(2, 4),  //
      m(3, 2), m(3, 3), m(3, 4),       //
      m(4, 2), m(4, 3), m(4, 4);
  const Eigen::Vector3d accel =
      m_act.ldlt().solve(Eigen::Vector3d(rhs.heave, rhs.roll, rhs.pitch));

  StateDerivative d;
  d.x_dot = state.surge;
  d.z_dot = state.w;
  d.w_dot = accel(0);
  d.phi_dot = state.p;
  d.p_dot = accel(1);
  d.theta_dot = state.q;
  d.q_dot = accel(2);
  return d;
}

}  // namespace rotv
