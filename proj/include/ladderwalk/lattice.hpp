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
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ladderwalk/coin.hpp"
#include "ladderwalk/error.hpp"

namespace ladderwalk {

/// Tolerance for total-probability checks on evolved states.
inline constexpr double kNormTolerance = 1e-10;
/// Tolerance for the normalization of a user-supplied initial coin.
inline constexpr double kInitialCoinTolerance = 1e-12;

namespace detail {

inline void require_unit_coin(const CoinSpinor& coin) {
  if (!(std::abs(coin.norm_squared() - 1.0) <= kInitialCoinTolerance)) {
    throw std::invalid_argument("initial coin state must have unit norm");
  }
}

inline double sum_norm(std::span<const cplx> amps) {
  double total = 0.0;
  for (const auto& a : amps) total += std::norm(a);
  return total;
}

}  // namespace detail

/// Walker on a finite window [-R, R] of the infinite line.
///
/// Amplitudes are stored site-major with the spin innermost. The window edges
/// must stay empty: a shift that would reach |m| = R raises LatticeOverflow.
class WalkerState1D {
 public:
  WalkerState1D() = default;

  /// Zero state on [-half_width, half_width].
  WalkerState1D(long half_width, long origin) : half_width_(half_width), origin_(origin) {
    detail::require(half_width >= 1, "lattice half-width must be positive");
    detail::require(origin > -half_width && origin < half_width,
                    "origin must lie strictly inside the lattice");
    amplitudes_.assign(static_cast<std::size_t>(2 * num_sites()), cplx{});
  }

  static WalkerState1D localized(long half_width, CoinSpinor coin = {}, long origin = 0) {
    detail::require_unit_coin(coin);
    WalkerState1D state(half_width, origin);
    state.at(Spin::Up, origin) = coin.up;
    state.at(Spin::Down, origin) = coin.down;
    return state;
  }

  long half_width() const { return half_width_; }
  long num_sites() const { return 2 * half_width_ + 1; }
  long origin() const { return origin_; }
  long steps_taken() const { return steps_taken_; }
  void set_steps_taken(long n) { steps_taken_ = n; }

  std::size_t index(Spin s, long m) const {
    return static_cast<std::size_t>((m + half_width_) * 2 + static_cast<int>(s));
  }
  bool contains(long m) const { return m >= -half_width_ && m <= half_width_; }

  cplx& at(Spin s, long m) { return amplitudes_[index(s, m)]; }
  const cplx& at(Spin s, long m) const { return amplitudes_[index(s, m)]; }

  CoinSpinor spinor(long m) const { return {at(Spin::Up, m), at(Spin::Down, m)}; }

  std::span<cplx> amplitudes() { return amplitudes_; }
  std::span<const cplx> amplitudes() const { return amplitudes_; }

  double norm_squared() const { return detail::sum_norm(amplitudes_); }

 private:
  long half_width_ = 0;
  long origin_ = 0;
  long steps_taken_ = 0;
  std::vector<cplx> amplitudes_;
};

/// Walker on a two-rail ladder: a 2-site ring across (side x in {0, 1}) times
/// the rung window [-R, R] along the open direction.
class LadderState {
 public:
  LadderState() = default;

  LadderState(long half_width, long origin) : half_width_(half_width), origin_(origin) {
    detail::require(half_width >= 1, "lattice half-width must be positive");
    detail::require(origin > -half_width && origin < half_width,
                    "origin rung must lie strictly inside the lattice");
    amplitudes_.assign(static_cast<std::size_t>(4 * num_rungs()), cplx{});
  }

  static LadderState localized(long half_width, CoinSpinor coin = {}, int side = 0,
                               long origin = 0) {
    detail::require_unit_coin(coin);
    detail::require(side == 0 || side == 1, "ladder side must be 0 or 1");
    LadderState state(half_width, origin);
    state.at(Spin::Up, side, origin) = coin.up;
    state.at(Spin::Down, side, origin) = coin.down;
    return state;
  }

  long half_width() const { return half_width_; }
  long num_rungs() const { return 2 * half_width_ + 1; }
  long origin() const { return origin_; }
  long steps_taken() const { return steps_taken_; }
  void set_steps_taken(long n) { steps_taken_ = n; }

  std::size_t index(Spin s, int side, long y) const {
    return static_cast<std::size_t>(((y + half_width_) * 2 + side) * 2 + static_cast<int>(s));
  }
  bool contains(long y) const { return y >= -half_width_ && y <= half_width_; }

  cplx& at(Spin s, int side, long y) { return amplitudes_[index(s, side, y)]; }
  const cplx& at(Spin s, int side, long y) const { return amplitudes_[index(s, side, y)]; }

  std::span<cplx> amplitudes() { return amplitudes_; }
  std::span<const cplx> amplitudes() const { return amplitudes_; }

  double norm_squared() const { return detail::sum_norm(amplitudes_); }

 private:
  long half_width_ = 0;
  long origin_ = 0;
  long steps_taken_ = 0;
  std::vector<cplx> amplitudes_;
};

}  // namespace ladderwalk
