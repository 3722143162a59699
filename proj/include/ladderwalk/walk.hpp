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
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "ladderwalk/angles.hpp"
#include "ladderwalk/coin.hpp"
#include "ladderwalk/error.hpp"
#include "ladderwalk/lattice.hpp"

namespace ladderwalk {

/// Coin angle of the rung-direction coin used unless overridden (coin C(-pi/4)).
inline constexpr double kDefaultLadderGammaY = -kPi / 2.0;

struct Conventional {
  double gamma = 0.0;
};

struct SplitStep {
  double alpha = 0.0;
  double beta = 0.0;
};

struct Ladder {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma_y = kDefaultLadderGammaY;
};

/// Which one-step unitary to apply, with its angles in radians.
using ProtocolSpec = std::variant<Conventional, SplitStep, Ladder>;

inline void validate(const ProtocolSpec& spec) {
  std::visit(
      [](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Conventional>) {
          require_finite_angle(p.gamma, "gamma");
        } else if constexpr (std::is_same_v<P, SplitStep>) {
          require_finite_angle(p.alpha, "alpha");
          require_finite_angle(p.beta, "beta");
        } else {
          require_finite_angle(p.alpha, "alpha");
          require_finite_angle(p.beta, "beta");
          require_finite_angle(p.gamma_y, "gamma_y");
        }
      },
      spec);
}

namespace detail {

// Up moves toward +R, so nothing may sit on R-1 or R before the move.
inline void guard_up_move(const WalkerState1D& s) {
  const long r = s.half_width();
  if (s.at(Spin::Up, r) != cplx{} || s.at(Spin::Up, r - 1) != cplx{}) {
    throw LatticeOverflow("spin-up amplitude reached the lattice edge at m=" +
                          std::to_string(r) + "; enlarge the lattice");
  }
}

inline void guard_down_move(const WalkerState1D& s) {
  const long r = s.half_width();
  if (s.at(Spin::Down, -r) != cplx{} || s.at(Spin::Down, -r + 1) != cplx{}) {
    throw LatticeOverflow("spin-down amplitude reached the lattice edge at m=" +
                          std::to_string(-r) + "; enlarge the lattice");
  }
}

inline void move_up_inplace(WalkerState1D& s) {
  guard_up_move(s);
  const long r = s.half_width();
  for (long m = r; m > -r; --m) s.at(Spin::Up, m) = s.at(Spin::Up, m - 1);
  s.at(Spin::Up, -r) = cplx{};
}

inline void move_down_inplace(WalkerState1D& s) {
  guard_down_move(s);
  const long r = s.half_width();
  for (long m = -r; m < r; ++m) s.at(Spin::Down, m) = s.at(Spin::Down, m + 1);
  s.at(Spin::Down, r) = cplx{};
}

inline void coin_inplace(WalkerState1D& s, const CoinOperator& coin) {
  auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); i += 2) coin.apply(amps[i], amps[i + 1]);
}

inline void coin_inplace(LadderState& s, const CoinOperator& coin) {
  auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); i += 2) coin.apply(amps[i], amps[i + 1]);
}

inline void conventional_inplace(WalkerState1D& s, const CoinOperator& coin) {
  coin_inplace(s, coin);
  move_up_inplace(s);
  move_down_inplace(s);
}

inline void splitstep_inplace(WalkerState1D& s, const CoinOperator& first,
                              const CoinOperator& second) {
  coin_inplace(s, first);
  move_up_inplace(s);
  coin_inplace(s, second);
  move_down_inplace(s);
}

// Half-shift of one spin component around the 2-site ring: x -> x+1 (mod 2)
// and x -> x-1 (mod 2) coincide, both swap the two sides.
inline void swap_sides_inplace(LadderState& s, Spin spin) {
  const long r = s.half_width();
  for (long y = -r; y <= r; ++y) std::swap(s.at(spin, 0, y), s.at(spin, 1, y));
}

inline void rung_shift_inplace(LadderState& s) {
  const long r = s.half_width();
  for (int side = 0; side < 2; ++side) {
    if (s.at(Spin::Up, side, r) != cplx{} || s.at(Spin::Up, side, r - 1) != cplx{} ||
        s.at(Spin::Down, side, -r) != cplx{} || s.at(Spin::Down, side, -r + 1) != cplx{}) {
      throw LatticeOverflow("ladder amplitude reached the rung edge (R=" + std::to_string(r) +
                            "); enlarge the lattice");
    }
  }
  for (int side = 0; side < 2; ++side) {
    for (long y = r; y > -r; --y) s.at(Spin::Up, side, y) = s.at(Spin::Up, side, y - 1);
    s.at(Spin::Up, side, -r) = cplx{};
    for (long y = -r; y < r; ++y) s.at(Spin::Down, side, y) = s.at(Spin::Down, side, y + 1);
    s.at(Spin::Down, side, r) = cplx{};
  }
}

struct LadderCoins {
  CoinOperator alpha;
  CoinOperator beta;
  CoinOperator gamma_y;
};

inline void ladder_inplace(LadderState& s, const LadderCoins& coins) {
  coin_inplace(s, coins.alpha);
  swap_sides_inplace(s, Spin::Up);
  coin_inplace(s, coins.beta);
  swap_sides_inplace(s, Spin::Down);
  coin_inplace(s, coins.gamma_y);
  rung_shift_inplace(s);
}

}  // namespace detail

/// Full shift: up moves to m+1, down moves to m-1.
inline WalkerState1D shift_full(WalkerState1D state) {
  detail::move_up_inplace(state);
  detail::move_down_inplace(state);
  return state;
}

/// Moves only the up component to m+1; down is held.
inline WalkerState1D shift_half_up(WalkerState1D state) {
  detail::move_up_inplace(state);
  return state;
}

/// Moves only the down component to m-1; up is held.
inline WalkerState1D shift_half_down(WalkerState1D state) {
  detail::move_down_inplace(state);
  return state;
}

/// Coin C(gamma/2) followed by the full shift.
inline WalkerState1D step_conventional(WalkerState1D state, double gamma) {
  detail::conventional_inplace(state, make_coin(gamma));
  state.set_steps_taken(state.steps_taken() + 1);
  return state;
}

/// Coin alpha, up half-shift, coin beta, down half-shift (applied in that order).
inline WalkerState1D step_splitstep(WalkerState1D state, double alpha, double beta) {
  detail::splitstep_inplace(state, make_coin(alpha), make_coin(beta));
  state.set_steps_taken(state.steps_taken() + 1);
  return state;
}

/// One ladder step. Applied in order: coin alpha, up half-shift across the
/// ring, coin beta, down half-shift across the ring, coin gamma_y, full shift
/// along the rungs.
inline LadderState step_ladder(LadderState state, const ProtocolSpec& spec) {
  const auto* p = std::get_if<Ladder>(&spec);
  detail::require(p != nullptr, "step_ladder requires a Ladder protocol");
  validate(spec);
  detail::ladder_inplace(state, {make_coin(p->alpha), make_coin(p->beta), make_coin(p->gamma_y)});
  state.set_steps_taken(state.steps_taken() + 1);
  return state;
}

/// Applies the line protocol (Conventional or SplitStep) n_steps times.
inline WalkerState1D evolve(WalkerState1D state, const ProtocolSpec& spec, long n_steps) {
  detail::require(n_steps >= 0, "n_steps must be nonnegative");
  validate(spec);
  if (const auto* c = std::get_if<Conventional>(&spec)) {
    const auto coin = make_coin(c->gamma);
    for (long i = 0; i < n_steps; ++i) detail::conventional_inplace(state, coin);
  } else if (const auto* sp = std::get_if<SplitStep>(&spec)) {
    const auto first = make_coin(sp->alpha);
    const auto second = make_coin(sp->beta);
    for (long i = 0; i < n_steps; ++i) detail::splitstep_inplace(state, first, second);
  } else {
    throw std::invalid_argument("a line walker cannot evolve under the Ladder protocol");
  }
  state.set_steps_taken(state.steps_taken() + n_steps);
  return state;
}

inline LadderState evolve(LadderState state, const ProtocolSpec& spec, long n_steps) {
  detail::require(n_steps >= 0, "n_steps must be nonnegative");
  const auto* p = std::get_if<Ladder>(&spec);
  detail::require(p != nullptr, "a ladder walker requires the Ladder protocol");
  validate(spec);
  const detail::LadderCoins coins{make_coin(p->alpha), make_coin(p->beta), make_coin(p->gamma_y)};
  for (long i = 0; i < n_steps; ++i) detail::ladder_inplace(state, coins);
  state.set_steps_taken(state.steps_taken() + n_steps);
  return state;
}

/// Probability per site over the whole window [first_site, first_site + size).
struct SiteDistribution {
  long first_site = 0;
  std::vector<double> probability;

  long last_site() const { return first_site + static_cast<long>(probability.size()) - 1; }
  double at(long m) const {
    if (m < first_site || m > last_site()) return 0.0;
    return probability[static_cast<std::size_t>(m - first_site)];
  }
  double total() const {
    double t = 0.0;
    for (double p : probability) t += p;
    return t;
  }
};

/// Joint (side, rung) probabilities; `side[x][y - first_rung]`.
struct LadderDistribution {
  long first_rung = 0;
  std::vector<double> side[2];

  double at(int x, long y) const {
    const long i = y - first_rung;
    if (i < 0 || i >= static_cast<long>(side[x].size())) return 0.0;
    return side[x][static_cast<std::size_t>(i)];
  }
  double total() const {
    double t = 0.0;
    for (const auto& s : side)
      for (double p : s) t += p;
    return t;
  }
};

inline SiteDistribution position_distribution(const WalkerState1D& state) {
  SiteDistribution d{-state.half_width(), {}};
  d.probability.reserve(static_cast<std::size_t>(state.num_sites()));
  for (long m = -state.half_width(); m <= state.half_width(); ++m) {
    d.probability.push_back(std::norm(state.at(Spin::Up, m)) + std::norm(state.at(Spin::Down, m)));
  }
  return d;
}

inline LadderDistribution position_distribution(const LadderState& state) {
  LadderDistribution d;
  d.first_rung = -state.half_width();
  for (int x = 0; x < 2; ++x) {
    d.side[x].reserve(static_cast<std::size_t>(state.num_rungs()));
    for (long y = -state.half_width(); y <= state.half_width(); ++y) {
      d.side[x].push_back(std::norm(state.at(Spin::Up, x, y)) +
                          std::norm(state.at(Spin::Down, x, y)));
    }
  }
  return d;
}

}  // namespace ladderwalk
