// Copyright 2026 The ladderwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Test-only reference: builds the walk operators as explicit dense matrices
// (Kronecker products of coin and shift blocks) and multiplies them out.
// Shares no code with the in-place stepping routines it is used to check.

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace ladderwalk::oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Eigen::Matrix2cd coin(double gamma) {
  Eigen::Matrix2cd c;
  c << std::cos(gamma / 2), -std::sin(gamma / 2), std::sin(gamma / 2), std::cos(gamma / 2);
  return c;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// |m + offset><m| on sites -R..R (truncated at the edges).
inline Mat translate(long R, long offset) {
  const long n = 2 * R + 1;
  Mat t = Mat::Zero(n, n);
  for (long i = 0; i < n; ++i) {
    const long j = i + offset;
    if (j >= 0 && j < n) t(j, i) = 1.0;
  }
  return t;
}

inline Mat proj(int spin) {
  Mat p = Mat::Zero(2, 2);
  p(spin, spin) = 1.0;
  return p;
}

// Basis ordering for the line: site-major, spin innermost (position (x) spin).
inline Mat line_coin(long R, double gamma) {
  return kron(Mat::Identity(2 * R + 1, 2 * R + 1), Mat(coin(gamma)));
}

inline Mat line_shift(long R, long up_offset, long down_offset) {
  return kron(translate(R, up_offset), proj(0)) + kron(translate(R, down_offset), proj(1));
}

inline Mat conventional_unitary(long R, double gamma) {
  return line_shift(R, +1, -1) * line_coin(R, gamma);
}

inline Mat splitstep_unitary(long R, double alpha, double beta) {
  return line_shift(R, 0, -1) * line_coin(R, beta) * line_shift(R, +1, 0) * line_coin(R, alpha);
}

// Ladder ordering: rung-major, then side, then spin (rung (x) side (x) spin).
inline Mat ladder_unitary(long R, double alpha, double beta, double gamma_y) {
  const Mat I_y = Mat::Identity(2 * R + 1, 2 * R + 1);
  const Mat I_x = Mat::Identity(2, 2);
  Mat ring_shift(2, 2);  // |x+1 mod 2><x|
  ring_shift << 0, 1, 1, 0;
  const auto spin_coin = [&](double g) { return kron(I_y, kron(I_x, Mat(coin(g)))); };
  const Mat tx_up = kron(I_y, kron(ring_shift, proj(0)) + kron(I_x, proj(1)));
  const Mat tx_down = kron(I_y, kron(I_x, proj(0)) + kron(ring_shift.transpose(), proj(1)));
  const Mat ty = kron(translate(R, +1), kron(I_x, proj(0))) + kron(translate(R, -1), kron(I_x, proj(1)));
  return ty * spin_coin(gamma_y) * tx_down * spin_coin(beta) * tx_up * spin_coin(alpha);
}

}  // namespace ladderwalk::oracle
