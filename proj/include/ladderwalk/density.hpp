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

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "ladderwalk/angles.hpp"
#include "ladderwalk/coin.hpp"
#include "ladderwalk/error.hpp"
#include "ladderwalk/lattice.hpp"

namespace ladderwalk {

/// Tolerance for trace, hermiticity, and positivity of coin density matrices.
inline constexpr double kDensityTolerance = 1e-12;

/// Reduced coin density matrix [[rho11, rho12], [conj(rho12), rho22]].
struct DensityMatrix2 {
  double rho11 = 1.0;
  double rho22 = 0.0;
  cplx rho12{};

  double trace() const { return rho11 + rho22; }
  /// rho11 * rho22 - |rho12|^2.
  double determinant() const { return rho11 * rho22 - std::norm(rho12); }

  bool is_valid(double tol = kDensityTolerance) const {
    return std::abs(trace() - 1.0) <= tol && rho11 >= -tol && rho22 >= -tol &&
           determinant() >= -tol;
  }

  DensityMatrix2& operator+=(const DensityMatrix2& o) {
    rho11 += o.rho11;
    rho22 += o.rho22;
    rho12 += o.rho12;
    return *this;
  }
  DensityMatrix2& operator*=(double f) {
    rho11 *= f;
    rho22 *= f;
    rho12 *= f;
    return *this;
  }
};

inline DensityMatrix2 average(const DensityMatrix2& a, const DensityMatrix2& b) {
  DensityMatrix2 out = a;
  out += b;
  out *= 0.5;
  return out;
}

/// Large-n limit of the coin density matrix of a line walk started in (1, 0).
///
/// The closed form holds for gamma in [0, pi]. Other angles are reduced into
/// (-pi, pi]; negative ones use rho(gamma) = Z rho(-gamma) Z with Z = diag(1, -1),
/// which follows from U(-gamma) = Z U(gamma) Z and Z(1, 0) = (1, 0).
inline DensityMatrix2 asymptotic_rho(double gamma) {
  require_finite_angle(gamma, "gamma");
  const double reduced = reduce_angle(gamma);
  const double g = std::abs(reduced);
  const double s = std::sin(g / 2.0);
  DensityMatrix2 rho;
  rho.rho11 = 1.0 - 0.5 * s;
  rho.rho22 = 0.5 * s;
  // (1 - sin(g/2)) tan(g/2) -> 0 as g -> pi.
  double off = 0.0;
  if (kPi - g > 1e-12) off = -0.5 * (1.0 - s) * std::tan(g / 2.0);
  rho.rho12 = cplx(reduced < 0.0 ? -off : off, 0.0);
  return rho;
}

/// Eigenvalues (larger, smaller) by direct diagonalization of the 2x2 matrix.
inline std::pair<double, double> rho_eigenvalues(const DensityMatrix2& rho) {
  const double half_trace = 0.5 * rho.trace();
  const double half_diff = 0.5 * (rho.rho11 - rho.rho22);
  const double radius = std::hypot(half_diff, std::abs(rho.rho12));
  double hi = half_trace + radius;
  double lo = half_trace - radius;
  if (lo < -kDensityTolerance || hi > 1.0 + kDensityTolerance) {
    throw NumericInvariantError("density matrix eigenvalue outside [0, 1]");
  }
  hi = std::clamp(hi, 0.0, 1.0);
  lo = std::clamp(lo, 0.0, 1.0);
  return {hi, lo};
}

/// Base-2 von Neumann entropy, with 0 log 0 = 0.
inline double entropy(const DensityMatrix2& rho) {
  const auto [hi, lo] = rho_eigenvalues(rho);
  double s = 0.0;
  for (double l : {hi, lo})
    if (l > 0.0) s -= l * std::log2(l);
  return s;
}

/// S(rho1) + S(rho2) - S((rho1 + rho2) / 2). Can be negative; not clamped.
inline double mutual_information(const DensityMatrix2& rho1, const DensityMatrix2& rho2) {
  return entropy(rho1) + entropy(rho2) - entropy(average(rho1, rho2));
}

/// Coin density matrix of a line state, tracing out position.
inline DensityMatrix2 finite_n_rho(const WalkerState1D& state) {
  DensityMatrix2 rho{0.0, 0.0, {}};
  for (long m = -state.half_width(); m <= state.half_width(); ++m) {
    const cplx u = state.at(Spin::Up, m);
    const cplx d = state.at(Spin::Down, m);
    rho.rho11 += std::norm(u);
    rho.rho22 += std::norm(d);
    rho.rho12 += u * std::conj(d);
  }
  return rho;
}

/// Running (Cesaro) mean of a sequence of density matrices.
class CesaroAverage {
 public:
  void add(const DensityMatrix2& rho) {
    sum_ += rho;
    ++count_;
  }
  long count() const { return count_; }
  DensityMatrix2 mean() const {
    detail::require(count_ > 0, "Cesaro average of an empty sequence");
    DensityMatrix2 out = sum_;
    out *= 1.0 / static_cast<double>(count_);
    return out;
  }

 private:
  DensityMatrix2 sum_{0.0, 0.0, {}};
  long count_ = 0;
};

}  // namespace ladderwalk
