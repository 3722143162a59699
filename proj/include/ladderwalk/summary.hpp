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

#include "ladderwalk/angles.hpp"
#include "ladderwalk/density.hpp"
#include "ladderwalk/observables.hpp"
#include "ladderwalk/sector.hpp"

namespace ladderwalk {

/// Analytic per-parameter-point quantities for the ladder protocol.
struct WalkSummary {
  double alpha = 0.0;
  double beta = 0.0;
  EffectiveAngles angles;
  MagnetizationTriple magnetization;
  double d1 = 0.0;
  double d2 = 0.0;
  DensityMatrix2 rho1;
  DensityMatrix2 rho2;
  double s1 = 0.0;
  double s2 = 0.0;
  double s_joint = 0.0;
  double mutual_information = 0.0;
  WalkPattern pattern = WalkPattern::Generic;
};

/// Discriminant of the sector coin evaluated on the angle reduced into
/// (-pi, pi], so that it equals the eigenvalue gap of asymptotic_rho.
inline double sector_discriminant(double gamma) { return discriminant(reduce_angle(gamma)); }

/// The pattern label assumes the default rung coin.
inline WalkSummary walk_summary(double alpha, double beta,
                                double gamma_y = kDefaultLadderGammaY) {
  WalkSummary w;
  w.alpha = alpha;
  w.beta = beta;
  w.angles = effective_angles(alpha, beta, gamma_y);
  w.magnetization = magnetization(w.angles.gamma1, w.angles.gamma2);
  w.d1 = sector_discriminant(w.angles.gamma1);
  w.d2 = sector_discriminant(w.angles.gamma2);
  w.rho1 = asymptotic_rho(w.angles.gamma1);
  w.rho2 = asymptotic_rho(w.angles.gamma2);
  w.s1 = entropy(w.rho1);
  w.s2 = entropy(w.rho2);
  w.s_joint = entropy(average(w.rho1, w.rho2));
  w.mutual_information = w.s1 + w.s2 - w.s_joint;
  w.pattern = classify_pattern(alpha, beta);
  return w;
}

}  // namespace ladderwalk
