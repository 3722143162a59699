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

#include <cmath>
#include <numbers>

#include "ladderwalk/error.hpp"

namespace ladderwalk {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance used when comparing angles modulo 2*pi.
inline constexpr double kAngleTolerance = 1e-9;

inline void require_finite_angle(double angle, const char* name) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument(std::string(name) + " must be a finite angle");
  }
}

/// Reduces an angle into (-pi, pi].
inline double reduce_angle(double angle) {
  double r = std::remainder(angle, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

/// Distance between two angles on the circle, in [0, pi].
inline double angular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

inline bool angles_congruent(double a, double b, double tol = kAngleTolerance) {
  return angular_distance(a, b) <= tol;
}

}  // namespace ladderwalk
