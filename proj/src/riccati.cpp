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

#include "rotv/riccati.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <vector>

#include "rotv/types.hpp"

namespace rotv {
namespace {

// Diagonal block partition of a real quasi-triangular Schur factor: blocks
// are 1x1 for real eigenvalues and 2x2 for complex pairs.
std::vector<int> schur_block_starts(const Eigen::MatrixXd& t) {
  const auto n = t.rows();
  std::vector<int> starts;
  int i = 0;
  while (i < n) {
    starts.push_back(i);
    const bool pair = (i + 1 < n) && (t(i + 1, i) != 0.0);
    i += pair ? 2 : 1;
  }
  starts.push_back(static_cast<int>(n));
  return starts;
}

bool schur_is_hurwitz(const Eigen::MatrixXd& t) {
  const std::vector<int> starts = schur_block_starts(t);
  for (std::size_t b = 0; b + 1 < starts.size(); ++b) {
    const int i = starts[b];
    const int size = starts[b + 1] - i;
    const double re =
        size == 1 ? t(i, i) : 0.5 * (t(i, i) + t(i + 1, i + 1));
    if (re >= 0.0) return false;
  }
  return true;
}

// Solves the small Sylvester system T_kk^T Y + Y T_jj = RHS (sizes <= 2) by
// Kronecker vectorization.
Eigen::MatrixXd solve_block(const Eigen::MatrixXd& t_kk,
                            const Eigen::MatrixXd& t_jj,
                            const Eigen::MatrixXd& rhs) {
  const auto a = t_kk.rows();
  const auto b = t_jj.rows();
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(a * b, a * b);
  // vec(T_kk^T Y) = (I_b (x) T_kk^T) vec(Y);
  // vec(Y T_jj)   = (T_jj^T (x) I_a) vec(Y).
  for (Eigen::Index col = 0; col < b; ++col) {
    sys.block(col * a, col * a, a, a) += t_kk.transpose();
  }
  for (Eigen::Index col = 0; col < b; ++col) {
    for (Eigen::Index row = 0; row < b; ++row) {
      sys.block(row * a, col * a, a, a) +=
          t_jj(col, row) * Eigen::MatrixXd::Identity(a, a);
    }
  }
  Eigen::VectorXd rhs_vec(a * b);
  for (Eigen::Index col = 0; col < b; ++col) {
    rhs_vec.segment(col * a, a) = rhs.col(col);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
  if (!lu.isInvertible()) {
    throw SynthesisError("Lyapunov back-substitution hit a singular block");
  }
  const Eigen::VectorXd y_vec = lu.solve(rhs_vec);
  Eigen::MatrixXd y(a, b);
  for (Eigen::Index col = 0; col < b; ++col) {
    y.col(col) = y_vec.segment(col * a, a);
  }
  return y;
}

}  // namespace

double spectral_abscissa(const Eigen::MatrixXd& a) {
  const Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  return es.eigenvalues().real().maxCoeff();
}

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& q) {
  const auto n = a.rows();
  if (a.cols() != n || q.rows() != n || q.cols() != n) {
    throw SynthesisError("Lyapunov solve needs square matching matrices");
  }

  const Eigen::RealSchur<Eigen::MatrixXd> schur(a);
  if (schur.info() != Eigen::Success) {
    throw SynthesisError("Schur decomposition failed");
  }
  const Eigen::MatrixXd t = schur.matrixT();
  const Eigen::MatrixXd u = schur.matrixU();
  if (!schur_is_hurwitz(t)) {
    throw SynthesisError("Lyapunov solve requires a Hurwitz matrix");
  }

  // A = U T U^T reduces A^T X + X A + Q = 0 to T^T Y + Y T = -C with
  // Y = U^T X U and C = U^T Q U.
  const Eigen::MatrixXd c = u.transpose() * q * u;
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(n, n);
  const std::vector<int> starts = schur_block_starts(t);
  const std::size_t blocks = starts.size() - 1;

  for (std::size_t jb = 0; jb < blocks; ++jb) {
    const int j = starts[jb];
    const int mj = starts[jb + 1] - j;
    // Right-hand side for this column block, folding in already-solved
    // columns of Y through the strictly-upper part of T.
    Eigen::MatrixXd rhs = -c.block(0, j, n, mj);
    if (j > 0) {
      rhs.noalias() -= y.leftCols(j) * t.block(0, j, j, mj);
    }
    for (std::size_t kb = 0; kb < blocks; ++kb) {
      const int k = starts[kb];
      const int mk = starts[kb + 1] - k;
      Eigen::MatrixXd rhs_k = rhs.block(k, 0, mk, mj);
      if (k > 0) {
        rhs_k.noalias() -=
            t.block(0, k, k, mk).transpose() * y.block(0, j, k, mj);
      }
      y.block(k, j, mk, mj) = solve_block(
          t.block(k, k, mk, mk), t.block(j, j, mj, mj), rhs_k);
    }
  }

  Eigen::MatrixXd x = u * y * u.transpose();
  return 0.5 * (x + x.transpose());
}

namespace {

// Stabilizing seed gain via the Bass pole-shift construction.
Eigen::MatrixXd bass_seed_gain(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& b) {
  const auto n = a.rows();
  if (spectral_abscissa(a) < 0.0) {
    return Eigen::MatrixXd::Zero(b.cols(), n);
  }
  const double beta = a.norm() + 0.5;
  const Eigen::MatrixXd shifted = a + beta * Eigen::MatrixXd::Identity(n, n);
  // (A + beta I) Z + Z (A + beta I)^T = 2 B B^T, rewritten into the
  // A^T X + X A + Q = 0 form with the Hurwitz matrix -(A + beta I)^T.
  const Eigen::MatrixXd z =
      solve_lyapunov(-shifted.transpose(), 2.0 * b * b.transpose());
  Eigen::FullPivLU<Eigen::MatrixXd> lu(z);
  if (!lu.isInvertible()) {
    throw SynthesisError(
        "stabilizing seed gain not found; system looks unstabilizable");
  }
  return b.transpose() * lu.inverse();
}

}  // namespace

CareResult solve_care(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                      const Eigen::MatrixXd& q, const Eigen::MatrixXd& r) {
  const auto n = a.rows();
  const auto m = b.cols();
  if (a.cols() != n || b.rows() != n || q.rows() != n || q.cols() != n ||
      r.rows() != m || r.cols() != m) {
    throw SynthesisError("Riccati solve got inconsistently sized matrices");
  }

  const Eigen::LLT<Eigen::MatrixXd> r_llt(r);
  if (r_llt.info() != Eigen::Success) {
    throw SynthesisError("R must be symmetric positive definite");
  }

  Eigen::MatrixXd k = bass_seed_gain(a, b);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  constexpr int kMaxIterations = 80;
  int iterations = 0;
  for (; iterations < kMaxIterations; ++iterations) {
    const Eigen::MatrixXd a_cl = a - b * k;
    p = solve_lyapunov(a_cl, q + k.transpose() * r * k);
    const Eigen::MatrixXd k_next = r_llt.solve(b.transpose() * p);
    const double change = (k_next - k).norm();
    k = k_next;
    if (change <= 1e-13 * (1.0 + k.norm())) {
      ++iterations;
      break;
    }
  }

  CareResult result;
  result.p = 0.5 * (p + p.transpose());
  result.k = r_llt.solve(b.transpose() * result.p);
  result.iterations = iterations;
  const Eigen::MatrixXd residual_mat =
      a.transpose() * result.p + result.p * a -
      result.p * b * r_llt.solve(b.transpose() * result.p) + q;
  result.residual = residual_mat.norm();
  if (!(result.residual <= 1e-8 * (1.0 + result.p.norm()))) {
    throw SynthesisError("Riccati iteration did not reach residual tolerance");
  }
  return result;
}

}  // namespace rotv
