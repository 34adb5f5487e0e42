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

#ifndef ROTV_RICCATI_HPP
#define ROTV_RICCATI_HPP

#include <Eigen/Dense>

namespace rotv {

// Largest eigenvalue real part of a square matrix (spectral abscissa).
double spectral_abscissa(const Eigen::MatrixXd& a);

// Solves the continuous Lyapunov equation A^T X + X A + Q = 0 for Hurwitz A
// by the Bartels-Stewart method: real Schur reduction of A followed by
// quasi-triangular block back-substitution.  Q must be square of matching
// size; the result is symmetrized.  Throws SynthesisError when A is not
// Hurwitz or the reduced system is singular.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& q);

struct CareResult {
  Eigen::MatrixXd p;       // stabilizing solution, symmetric PSD
  Eigen::MatrixXd k;       // gain R^{-1} B^T P
  double residual = 0.0;   // Frobenius norm of the Riccati residual
  int iterations = 0;      // Newton steps taken
};

// Solves the continuous algebraic Riccati equation
//
//   A^T P + P A - P B R^{-1} B^T P + Q = 0
//
// by Newton-Kleinman iteration: each step solves one Lyapunov equation for
// the current closed-loop matrix.  The iteration is seeded with a stabilizing
// gain from the Bass pole-shift construction (K0 = B^T Z^{-1} with
// (A + beta I) Z + Z (A + beta I)^T = 2 B B^T, beta > ||A||), or K0 = 0 when
// A is already Hurwitz.  Q must be symmetric PSD and R symmetric PD; (A, B)
// must be stabilizable.  Throws SynthesisError when no acceptable solution is
// found (residual above 1e-8 * (1 + ||P||_F)).
CareResult solve_care(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                      const Eigen::MatrixXd& q, const Eigen::MatrixXd& r);

}  // namespace rotv

#endif  // ROTV_RICCATI_HPP
