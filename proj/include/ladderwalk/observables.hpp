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
#include <span>
#include <vector>

#include "ladderwalk/angles.hpp"
#include "ladderwalk/lattice.hpp"
#include "ladderwalk/walk.hpp"

namespace ladderwalk {

struct SpreadReport {
  long n = 0;
  double second_moment = 0.0;
  /// Ballistic coefficient 1 - |sin(gamma/2)| that second_moment / n^2 approaches.
  double predicted_coefficient = 0.0;
};

struct MagnetizationTriple {
  double m1 = 0.0;
  double m2 = 0.0;
  double m = 0.0;
};

/// Second moment of a site distribution about `origin` (not about the mean).
inline double second_moment(const SiteDistribution& dist, long origin) {
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.probability.size(); ++i) {
    const double d = static_cast<double>(dist.first_site + static_cast<long>(i) - origin);
    acc += dist.probability[i] * d * d;
  }
  return acc;
}

/// 1 - |sin(gamma/2)|: the asymptotic up/down occupation difference.
inline double magnetization(double gamma) {
  require_finite_angle(gamma, "gamma");
  return 1.0 - std::abs(std::sin(gamma / 2.0));
}

inline MagnetizationTriple magnetization(double gamma1, double gamma2) {
  MagnetizationTriple t;
  t.m1 = magnetization(gamma1);
  t.m2 = magnetization(gamma2);
  t.m = 0.5 * (t.m1 + t.m2);
  return t;
}

inline SpreadReport spread_report(const WalkerState1D& state, double gamma) {
  return {state.steps_taken(), second_moment(position_distribution(state), state.origin()),
          magnetization(gamma)};
}

/// Normalized eigenvalue gap of the asymptotic coin density matrix,
/// (|cos(gamma/4)| - |sin(gamma/4)|) / (|cos(gamma/4)| + |sin(gamma/4)|).
/// The formula is not 2*pi periodic; pass a reduced angle to get the gap.
inline double discriminant(double gamma) {
  require_finite_angle(gamma, "gamma");
  const double c = std::abs(std::cos(gamma / 4.0));
  const double s = std::abs(std::sin(gamma / 4.0));
  return (c - s) / (c + s);
}

/// Per-side rung profiles, each weighted by that side's total probability.
struct SideMarginals {
  long first_rung = 0;
  std::array<std::vector<double>, 2> side;

  std::array<double, 2> masses() const {
    std::array<double, 2> m{0.0, 0.0};
    for (int x = 0; x < 2; ++x)
      for (double p : side[x]) m[x] += p;
    return m;
  }

  /// Profile of one side rescaled to unit mass; all zeros if the side is empty.
  std::vector<double> normalized(int x) const {
    std::vector<double> out = side[x];
    const double total = masses()[x];
    if (total > 0.0)
      for (double& p : out) p /= total;
    return out;
  }
};

inline SideMarginals side_marginals(const LadderState& state) {
  const auto joint = position_distribution(state);
  return {joint.first_rung, {joint.side[0], joint.side[1]}};
}

/// Total-variation distance, half the L1 distance.
inline double total_variation(std::span<const double> p, std::span<const double> q) {
  detail::require(p.size() == q.size(), "total_variation: distributions differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
  return 0.5 * acc;
}

/// Distance between the two side profiles after each is normalized to unit mass.
inline double side_profile_distance(const LadderState& state) {
  const auto marg = side_marginals(state);
  return total_variation(marg.normalized(0), marg.normalized(1));
}

}  // namespace ladderwalk
