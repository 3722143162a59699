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
#include <string_view>

#include "ladderwalk/angles.hpp"
#include "ladderwalk/lattice.hpp"
#include "ladderwalk/walk.hpp"

namespace ladderwalk {

/// Coin angles of the two line walks hidden inside the ladder walk, plus the
/// phase that separates them. Values are not reduced modulo 2*pi.
struct EffectiveAngles {
  double gamma1 = 0.0;  // k_x = 0 sector
  double gamma2 = 0.0;  // k_x = pi sector
  double phi = 0.0;     // gamma2 - gamma1
};

/// Effective coin angles for the ladder protocol with the default rung coin.
inline EffectiveAngles effective_angles(double alpha, double beta) {
  require_finite_angle(alpha, "alpha");
  require_finite_angle(beta, "beta");
  EffectiveAngles a;
  a.gamma1 = alpha + beta - kPi / 2.0;
  a.phi = kTwoPi - 2.0 * beta;
  a.gamma2 = alpha - beta + 3.0 * kPi / 2.0;
  return a;
}

/// General form for an arbitrary rung-coin angle. In the k=pi sector the two
/// ring half-shifts act as diag(-1, 1) and diag(1, -1), which conjugates the
/// beta coin into C(-beta/2) and contributes an overall sign; the sign is
/// absorbed by adding 2*pi to the angle.
inline EffectiveAngles effective_angles(double alpha, double beta, double gamma_y) {
  require_finite_angle(gamma_y, "gamma_y");
  auto a = effective_angles(alpha, beta);
  const double shift = gamma_y - kDefaultLadderGammaY;
  a.gamma1 += shift;
  a.gamma2 += shift;
  return a;
}

/// Sector weight below which the sector is treated as empty.
inline constexpr double kEmptySectorWeight = 1e-14;

/// One quasi-momentum sector of a ladder state.
struct Sector {
  /// Renormalized line state; raw (unnormalized) amplitudes when `empty`.
  WalkerState1D state;
  double weight = 0.0;
  bool empty = false;
};

/// Ladder state split into the k_x = 0 (symmetric) and k_x = pi
/// (antisymmetric) combinations of the two sides.
struct SectorPair {
  Sector k0;
  Sector kpi;

  std::array<double, 2> weights() const { return {k0.weight, kpi.weight}; }
};

namespace detail {

inline void finish_sector(Sector& sector) {
  sector.weight = sector.state.norm_squared();
  sector.empty = sector.weight < kEmptySectorWeight;
  if (!sector.empty) {
    const double scale = 1.0 / std::sqrt(sector.weight);
    for (auto& a : sector.state.amplitudes()) a *= scale;
  }
}

inline double sector_scale(const Sector& s) { return s.empty ? 1.0 : std::sqrt(s.weight); }

}  // namespace detail

inline SectorPair sector_project(const LadderState& state) {
  const long r = state.half_width();
  SectorPair pair{{WalkerState1D(r, state.origin())}, {WalkerState1D(r, state.origin())}};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (long y = -r; y <= r; ++y) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      const cplx a0 = state.at(s, 0, y);
      const cplx a1 = state.at(s, 1, y);
      pair.k0.state.at(s, y) = (a0 + a1) * inv_sqrt2;
      pair.kpi.state.at(s, y) = (a0 - a1) * inv_sqrt2;
    }
  }
  pair.k0.state.set_steps_taken(state.steps_taken());
  pair.kpi.state.set_steps_taken(state.steps_taken());
  detail::finish_sector(pair.k0);
  detail::finish_sector(pair.kpi);
  return pair;
}

/// Inverse of sector_project.
inline LadderState sector_reconstruct(const SectorPair& pair) {
  const auto& s0 = pair.k0.state;
  const auto& s1 = pair.kpi.state;
  detail::require(s0.half_width() == s1.half_width() && s0.origin() == s1.origin(),
                  "sector states must share a lattice");
  const long r = s0.half_width();
  LadderState out(r, s0.origin());
  const double f0 = detail::sector_scale(pair.k0) / std::sqrt(2.0);
  const double f1 = detail::sector_scale(pair.kpi) / std::sqrt(2.0);
  for (long y = -r; y <= r; ++y) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      const cplx a = f0 * s0.at(s, y);
      const cplx b = f1 * s1.at(s, y);
      out.at(s, 0, y) = a + b;
      out.at(s, 1, y) = a - b;
    }
  }
  out.set_steps_taken(s0.steps_taken());
  return out;
}

enum class WalkPattern { Alternating, OneSided, IdenticalDominated, HadamardDegenerate, Generic };

inline std::string_view to_string(WalkPattern p) {
  switch (p) {
    case WalkPattern::Alternating: return "alternating";
    case WalkPattern::OneSided: return "one-sided";
    case WalkPattern::IdenticalDominated: return "identical";
    case WalkPattern::HadamardDegenerate: return "hadamard-degenerate";
    case WalkPattern::Generic: return "generic";
  }
  return "generic";
}

/// Walk regime of the ladder protocol. Conditions are tested modulo 2*pi in
/// this order; the first match wins.
inline WalkPattern classify_pattern(double alpha, double beta) {
  require_finite_angle(alpha, "alpha");
  require_finite_angle(beta, "beta");
  constexpr double half_pi = kPi / 2.0;
  const auto quarter_turn = [](double a) {
    return angles_congruent(a, half_pi) || angles_congruent(a, -half_pi);
  };
  if (angles_congruent(beta, 0.0)) return WalkPattern::Alternating;
  if (angles_congruent(beta, kPi)) return WalkPattern::OneSided;
  if (quarter_turn(alpha + beta) || quarter_turn(alpha - beta)) {
    return WalkPattern::IdenticalDominated;
  }
  if (quarter_turn(alpha)) return WalkPattern::HadamardDegenerate;
  return WalkPattern::Generic;
}

}  // namespace ladderwalk
