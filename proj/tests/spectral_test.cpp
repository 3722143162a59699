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

#include <Eigen/Dense>
#include <cmath>

#include "gtest/gtest.h"
#include "ladderwalk/spectral.hpp"
#include "ladderwalk/walk.hpp"
#include "support/test_util.hpp"

using namespace ladderwalk;
using ladderwalk::testing::AngleSource;

namespace {

Eigen::Matrix2cd block(double gamma, double k) {
  const auto u = momentum_unitary(gamma, k);
  Eigen::Matrix2cd m;
  m << u[0], u[1], u[2], u[3];
  return m;
}

double residual(double gamma, double k, const CoinSpinor& e, cplx lambda) {
  Eigen::Vector2cd v(e.up, e.down);
  return (block(gamma, k) * v - lambda * v).norm();
}

}  // namespace

TEST(dispersion, examples) {
  for (int i = -10; i <= 10; ++i) {
    const double k = kPi * i / 10.0;
    EXPECT_NEAR(dispersion(0.0, k), std::abs(k), 1e-7);
  }
  AngleSource gen(67);
  for (int i = 0; i < 20; ++i) EXPECT_NEAR(dispersion(gen.angle(), kPi / 2), kPi / 2, 1e-15);
  EXPECT_NEAR(dispersion(kPi / 2, 0.0), kPi / 4, 1e-15);
}

TEST(mode_eigensystem, residual_against_numeric_solver) {
  const double g = kPi / 2, k = 0.3;
  const auto mode = mode_eigensystem(g, k);
  EXPECT_LT(residual(g, k, mode.e_plus, mode.lambda_plus), 1e-10);
  EXPECT_LT(residual(g, k, mode.e_minus, mode.lambda_minus), 1e-10);

  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(block(g, k));
  // The numeric eigenphases are -omega and +omega in some order.
  const double p0 = std::arg(solver.eigenvalues()(0));
  const double p1 = std::arg(solver.eigenvalues()(1));
  EXPECT_NEAR(std::min(p0, p1), -mode.omega, 1e-12);
  EXPECT_NEAR(std::max(p0, p1), mode.omega, 1e-12);
}

TEST(mode_eigensystem, orthonormal_on_grid) {
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double g = -kPi + kTwoPi * (i + 0.5) / 10.0;
      const double k = -kPi + kTwoPi * j / 10.0;
      const auto m = mode_eigensystem(g, k);
      EXPECT_NEAR(m.e_plus.norm_squared(), 1.0, 1e-10);
      EXPECT_NEAR(m.e_minus.norm_squared(), 1.0, 1e-10);
      const cplx overlap = std::conj(m.e_plus.up) * m.e_minus.up + std::conj(m.e_plus.down) * m.e_minus.down;
      EXPECT_LT(std::abs(overlap), 1e-10);
      EXPECT_NEAR(std::abs(m.lambda_plus), 1.0, 1e-12);
      EXPECT_LT(residual(g, k, m.e_plus, m.lambda_plus), 1e-10);
      EXPECT_LT(residual(g, k, m.e_minus, m.lambda_minus), 1e-10);
    }
  }
}

TEST(mode_eigensystem, quarter_turn_coin_at_zero_momentum) {
  const auto m = mode_eigensystem(kPi, 0.0);
  EXPECT_NEAR(m.omega, kPi / 2, 1e-15);
  EXPECT_NEAR(std::abs(m.lambda_plus - cplx(0, -1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m.lambda_minus - cplx(0, 1)), 0.0, 1e-15);
}

TEST(mode_eigensystem, identity_coin_is_degenerate) {
  EXPECT_THROW(mode_eigensystem(0.0, 0.4), DegenerateCoin);
  EXPECT_THROW(mode_eigensystem(kTwoPi, 0.4), DegenerateCoin);
}

TEST(evolve_spectral, examples) {
  const auto zero = evolve_spectral(CoinSpinor{}, kPi / 2, 0, 16);
  EXPECT_NEAR(std::abs(zero.at(Spin::Up, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(zero.norm_squared(), 1.0, 1e-14);

  const auto free = evolve_spectral(CoinSpinor{}, 0.0, 5, 12);
  EXPECT_NEAR(std::norm(free.at(Spin::Up, 5)), 1.0, 1e-14);

  const auto spectral = evolve_spectral(CoinSpinor{}, kPi / 2, 10, 64);
  const auto direct = evolve(WalkerState1D::localized(12), Conventional{kPi / 2}, 10);
  for (long m = -10; m <= 10; ++m) {
    EXPECT_NEAR(std::norm(spectral.at(Spin::Up, m)) + std::norm(spectral.at(Spin::Down, m)),
                std::norm(direct.at(Spin::Up, m)) + std::norm(direct.at(Spin::Down, m)), 1e-12);
  }
}

TEST(evolve_spectral, rejects_aliasing_ring) {
  EXPECT_THROW(evolve_spectral(CoinSpinor{}, 1.0, 10, 20), AliasingError);
  EXPECT_THROW(evolve_spectral(CoinSpinor{}, 1.0, 3, 9), AliasingError);
}

TEST(evolve_spectral, amplitudes_match_position_space) {
  AngleSource gen(71);
  for (int i = 0; i < 20; ++i) {
    const double g = gen.angle();
    const long n = gen.integer(0, 32);
    const auto coin = gen.coin();
    const auto spectral = evolve_spectral(coin, g, n, 2 * n + 2);
    const auto direct = evolve(WalkerState1D::localized(n + 2, coin), Conventional{g}, n);
    for (long m = -n; m <= n; ++m) {
      EXPECT_LT(std::abs(spectral.at(Spin::Up, m) - direct.at(Spin::Up, m)), 1e-12);
      EXPECT_LT(std::abs(spectral.at(Spin::Down, m) - direct.at(Spin::Down, m)), 1e-12);
    }
  }
}
