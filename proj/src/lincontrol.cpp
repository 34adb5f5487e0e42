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

#include "rotv/lincontrol.hpp"

#include <cmath>
#include <sstream>

#include "rotv/riccati.hpp"
#include "rotv/vehicle.hpp"

namespace rotv {
namespace {

// Reduced dynamics as a plain vector field over the linearization state
// [z, z_dot, phi, phi_dot, theta, theta_dot] and input [u1, u2, u3].
Vector6 reduced_dynamics(const Vector6& x, const Eigen::Vector3d& u,
                         double surge, const VehicleParams& params,
                         const AddedMassCoeffs& coeffs) {
  BodyState state;
  state.z = x(0);
  state.w = x(1);
  state.phi = x(2);
  state.p = x(3);
  state.theta = x(4);
  state.q = x(5);
  state.surge = surge;
  const FinDeflections fins{u(0), u(1), u(2)};
  const StateDerivative d =
      state_derivative(state, fins, GeneralizedForce{}, params, coeffs);
  Vector6 out;
  out << d.z_dot, d.w_dot, d.phi_dot, d.p_dot, d.theta_dot, d.q_dot;
  return out;
}

// (heave, pitch) accelerations at a trim candidate v = (theta, u_fwd, u3).
Eigen::Vector2d trim_residual(const Eigen::Vector3d& v, double surge,
                              const VehicleParams& params,
                              const AddedMassCoeffs& coeffs) {
  Vector6 x = Vector6::Zero();
  x(4) = v(0);
  const Eigen::Vector3d u(v(1), v(1), v(2));
  const Vector6 d = reduced_dynamics(x, u, surge, params, coeffs);
  return {d(1), d(5)};
}

}  // namespace

TrimPoint trim_state(double surge, const VehicleParams& params) {
  if (!std::isfinite(surge) || surge < 0.0) {
    throw SynthesisError("trim needs a non-negative tow speed");
  }
  validate(params);
  const AddedMassCoeffs coeffs = compute_added_mass_coefficients(params);

  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  Eigen::Vector2d r = trim_residual(v, surge, params, coeffs);
  constexpr double kTol = 1e-11;
  constexpr double kStep = 1e-6;
  for (int iter = 0; iter < 100 && r.norm() > kTol; ++iter) {
    // Central-difference Jacobian of the 2-vector residual.
    Eigen::Matrix<double, 2, 3> jac;
    for (int i = 0; i < 3; ++i) {
      Eigen::Vector3d lo = v, hi = v;
      hi(i) += kStep;
      lo(i) -= kStep;
      jac.col(i) = (trim_residual(hi, surge, params, coeffs) -
                    trim_residual(lo, surge, params, coeffs)) /
                   (2.0 * kStep);
    }
    const Eigen::Vector3d dv =
        jac.jacobiSvd(Eigen::ComputeFullU | Eigen::ComputeFullV).solve(-r);
    // Damped update: halve the step until the residual shrinks.
    double alpha = 1.0;
    Eigen::Vector3d v_next = v + dv;
    Eigen::Vector2d r_next = trim_residual(v_next, surge, params, coeffs);
    while (r_next.norm() > r.norm() && alpha > 1e-6) {
      alpha *= 0.5;
      v_next = v + alpha * dv;
      r_next = trim_residual(v_next, surge, params, coeffs);
    }
    if (r_next.norm() >= r.norm()) break;
    v = v_next;
    r = r_next;
  }
  if (r.norm() > 1e-10) {
    std::ostringstream msg;
    msg << "trim search stalled at residual " << r.norm() << " for U=" << surge;
    throw SynthesisError(msg.str());
  }

  TrimPoint trim;
  trim.state.theta = v(0);
  trim.state.surge = surge;
  trim.fins = FinDeflections{v(1), v(1), v(2)};
  trim.residual = r.norm();
  return trim;
}

StateSpace linearize(double surge, const VehicleParams& params) {
  const TrimPoint trim = trim_state(surge, params);
  const AddedMassCoeffs coeffs = compute_added_mass_coefficients(params);

  Vector6 x0 = Vector6::Zero();
  x0(4) = trim.state.theta;
  const Eigen::Vector3d u0 = trim.fins.vec();

  auto jacobian = [&](double h) {
    StateSpace ss;
    for (int i = 0; i < 6; ++i) {
      Vector6 hi = x0, lo = x0;
      hi(i) += h;
      lo(i) -= h;
      ss.a.col(i) = (reduced_dynamics(hi, u0, surge, params, coeffs) -
                     reduced_dynamics(lo, u0, surge, params, coeffs)) /
                    (2.0 * h);
    }
    for (int i = 0; i < 3; ++i) {
      Eigen::Vector3d hi = u0, lo = u0;
      hi(i) += h;
      lo(i) -= h;
      ss.b.col(i) = (reduced_dynamics(x0, hi, surge, params, coeffs) -
                     reduced_dynamics(x0, lo, surge, params, coeffs)) /
                    (2.0 * h);
    }
    return ss;
  };

  constexpr double kStep = 1e-6;
  const StateSpace coarse = jacobian(kStep);
  StateSpace fine = jacobian(kStep / 2.0);
  const double drift = (fine.a - coarse.a).norm() + (fine.b - coarse.b).norm();
  const double scale = 1.0 + fine.a.norm() + fine.b.norm();
  if (!(drift <= 1e-3 * scale)) {
    throw SynthesisError(
        "finite-difference linearization failed its step-halving check");
  }
  // Richardson extrapolation of the two central-difference estimates.
  fine.a = (4.0 * fine.a - coarse.a) / 3.0;
  fine.b = (4.0 * fine.b - coarse.b) / 3.0;
  fine.surge = surge;
  return fine;
}

Matrix36 lqr_gain(const StateSpace& model, const LqrWeights& weights) {
  for (int i = 0; i < 6; ++i) {
    if (!(weights.q_diag(i) >= 0.0)) {
      throw SynthesisError("Q weights must be non-negative");
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (!(weights.r_diag(i) > 0.0)) {
      throw SynthesisError("R weights must be positive");
    }
  }
  const Eigen::MatrixXd q = weights.q_diag.asDiagonal();
  const Eigen::MatrixXd r = weights.r_diag.asDiagonal();
  const CareResult care = solve_care(model.a, model.b, q, r);
  const Matrix36 k = care.k;
  const double alpha = spectral_abscissa(model.a - model.b * k);
  if (!(alpha < 0.0)) {
    std::ostringstream msg;
    msg << "synthesized gain leaves the closed loop unstable (abscissa "
        << alpha << ")";
    throw SynthesisError(msg.str());
  }
  return k;
}

Matrix36 GainSchedule::gain_at(double surge) const {
  if (entries.empty()) {
    throw SynthesisError("gain schedule is empty");
  }
  if (surge <= entries.front().surge) return entries.front().gain;
  if (surge >= entries.back().surge) return entries.back().gain;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (surge <= entries[i].surge) {
      const auto& lo = entries[i - 1];
      const auto& hi = entries[i];
      const double s = (surge - lo.surge) / (hi.surge - lo.surge);
      return (1.0 - s) * lo.gain + s * hi.gain;
    }
  }
  return entries.back().gain;
}

GainSchedule build_gain_schedule(const std::vector<double>& speeds,
                                 const LqrWeights& weights,
                                 const VehicleParams& params) {
  if (speeds.empty()) {
    throw SynthesisError("gain schedule needs at least one speed");
  }
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    if (!std::isfinite(speeds[i]) || speeds[i] <= 0.0) {
      throw SynthesisError("schedule speeds must be positive");
    }
    if (i > 0 && speeds[i] <= speeds[i - 1]) {
      throw SynthesisError("schedule speeds must be strictly increasing");
    }
  }

  GainSchedule schedule;
  for (double u : speeds) {
    GainSchedule::Entry entry;
    entry.surge = u;
    entry.gain = lqr_gain(linearize(u, params), weights);
    schedule.entries.push_back(entry);
  }

  // Interpolated gains must also stabilize between the design points; check
  // each pair at the midpoint velocity and report violations.
  for (std::size_t i = 0; i + 1 < schedule.entries.size(); ++i) {
    const double mid =
        0.5 * (schedule.entries[i].surge + schedule.entries[i + 1].surge);
    const Matrix36 k_mid =
        0.5 * (schedule.entries[i].gain + schedule.entries[i + 1].gain);
    const StateSpace model = linearize(mid, params);
    const double alpha = spectral_abscissa(model.a - model.b * k_mid);
    if (!(alpha < 0.0)) {
      std::ostringstream msg;
      msg << "interpolated gain at U=" << mid
          << " m/s fails to stabilize the mid-velocity model (abscissa "
          << alpha << ")";
      schedule.warnings.push_back(msg.str());
    }
  }
  return schedule;
}

}  // namespace rotv
