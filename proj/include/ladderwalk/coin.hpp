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

#include <array>
#include <cmath>
#include <complex>

#include "ladderwalk/angles.hpp"

namespace ladderwalk {

using cplx = std::complex<double>;

enum class Spin : int { Up = 0, Down = 1 };

/// Two-component coin state, ordered (up, down).
struct CoinSpinor {
  cplx up{1.0, 0.0};
  cplx down{0.0, 0.0};

  double norm_squared() const { return std::norm(up) + std::norm(down); }

  /// Point (theta, phi) on the Bloch sphere: cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>.
  static CoinSpinor from_bloch(double theta, double phi) {
    require_finite_angle(theta, "theta");
    require_finite_angle(phi, "phi");
    return {cplx(std::cos(theta / 2.0), 0.0), std::polar(std::sin(theta / 2.0), phi)};
  }

  friend bool operator==(const CoinSpinor&, const CoinSpinor&) = default;
};

/// Real rotation of the coin, [[c, -s], [s, c]] with c = cos(gamma/2), s = sin(gamma/2).
///
/// `gamma` is the coin angle; the matrix rotates by half of it. Every protocol
/// in this library names its coins by this full angle.
class CoinOperator {
 public:
  explicit CoinOperator(double gamma)
      : gamma_(gamma), c_(std::cos(gamma / 2.0)), s_(std::sin(gamma / 2.0)) {}

  double gamma() const { return gamma_; }
  double c() const { return c_; }
  double s() const { return s_; }

  std::array<std::array<double, 2>, 2> entries() const { return {{{c_, -s_}, {s_, c_}}}; }

  double determinant() const { return c_ * c_ + s_ * s_; }

  /// Applies the rotation to one (up, down) pair in place.
  void apply(cplx& up, cplx& down) const {
    const cplx u = up;
    up = c_ * u - s_ * down;
    down = s_ * u + c_ * down;
  }

  CoinSpinor operator*(CoinSpinor v) const {
    apply(v.up, v.down);
    return v;
  }

 private:
  double gamma_;
  double c_;
  double s_;
};

inline CoinOperator make_coin(double gamma) {
  require_finite_angle(gamma, "coin angle");
  return CoinOperator(gamma);
}

}  // namespace ladderwalk
