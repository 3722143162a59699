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

#include <cmath>

#include "gtest/gtest.h"
#include "ladderwalk/observables.hpp"
#include "ladderwalk/sector.hpp"
#include "support/test_util.hpp"

using namespace ladderwalk;
using ladderwalk::testing::AngleSource;
using ladderwalk::testing::max_amplitude_distance;

namespace {

double max_probability_gap(const WalkerState1D& a, const WalkerState1D& b) {
  const auto p = position_distribution(a);
  const auto q = position_distribution(b);
  double worst = 0.0;
  for (long m = -a.half_width(); m <= a.half_width(); ++m) {
    worst = std::max(worst, std::abs(p.at(m) - q.at(m)));
  }
  return worst;
}

// Amplitude distance after removing the best global phase.
double phase_aligned_distance(const WalkerState1D& a, const WalkerState1D& b) {
  cplx overlap{};
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    overlap += std::conj(b.amplitudes()[i]) * a.amplitudes()[i];
  }
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    worst = std::max(worst, std::abs(a.amplitudes()[i] - phase * b.amplitudes()[i]));
  }
  return worst;
}

}  // namespace

TEST(effective_angles, examples) {
  auto a = effective_angles(-kPi / 4, kPi / 4);
  EXPECT_NEAR(a.gamma1, -kPi / 2, 1e-15);
  EXPECT_NEAR(a.gamma2, kPi, 1e-15);

  a = effective_angles(-kPi / 4, 3 * kPi / 4);
  EXPECT_NEAR(a.gamma1, 0.0, 1e-15);
  EXPECT_NEAR(a.gamma2, kPi / 2, 1e-15);

  AngleSource gen(1);
  for (int i = 0; i < 100; ++i) {
    const double alpha = gen.angle(), beta = gen.angle();
    const auto e = effective_angles(alpha, beta);
    EXPECT_NEAR(e.gamma2 - e.gamma1, e.phi, 1e-12);
    EXPECT_NEAR(e.phi, 2 * kPi - 2 * beta, 1e-12);
    const auto z = effective_angles(alpha, 0.0);
    EXPECT_NEAR(z.gamma2 - z.gamma1, 2 * kPi, 1e-12);
  }
}

TEST(sector_project, side_localized_splits_evenly) {
  const auto pair = sector_project(LadderState::localized(4));
  EXPECT_NEAR(pair.k0.weight, 0.5, 1e-15);
  EXPECT_NEAR(pair.kpi.weight, 0.5, 1e-15);
  EXPECT_FALSE(pair.k0.empty);
  EXPECT_EQ(pair.k0.state.at(Spin::Up, 0), cplx(1.0));
  EXPECT_EQ(pair.kpi.state.at(Spin::Up, 0), cplx(1.0));
}

TEST(sector_project, symmetric_state_has_empty_pi_sector) {
  LadderState s(4, 0);
  s.at(Spin::Up, 0, 1) = std::sqrt(0.5);
  s.at(Spin::Up, 1, 1) = std::sqrt(0.5);
  const auto pair = sector_project(s);
  EXPECT_NEAR(pair.k0.weight, 1.0, 1e-15);
  EXPECT_EQ(pair.kpi.weight, 0.0);
  EXPECT_TRUE(pair.kpi.empty);
  EXPECT_LT(max_amplitude_distance(sector_reconstruct(pair), s), 1e-15);
}

TEST(sector_project, round_trip_is_exact) {
  AngleSource gen(17);
  for (int i = 0; i < 30; ++i) {
    const auto s = evolve(LadderState::localized(22, gen.coin()), Ladder{gen.angle(), gen.angle()},
                          gen.integer(0, 20));
    EXPECT_LT(max_amplitude_distance(sector_reconstruct(sector_project(s)), s), 1e-12);
    const auto w = sector_project(s).weights();
    EXPECT_NEAR(w[0] + w[1], 1.0, 1e-10);
  }
}

// Each sector runs as a line walk with its own effective coin.
TEST(sector_project, sectors_follow_effective_line_walks) {
  const double grid[] = {-3 * kPi / 4, -kPi / 4, kPi / 4, 3 * kPi / 4};
  const long n = 64;
  for (double alpha : grid) {
    for (double beta : grid) {
      const auto init = LadderState::localized(n + 2);
      const auto start = sector_project(init);
      const auto end = sector_project(evolve(init, Ladder{alpha, beta}, n));
      const auto angles = effective_angles(alpha, beta);
      const auto line0 = evolve(start.k0.state, Conventional{angles.gamma1}, n);
      const auto line1 = evolve(start.kpi.state, Conventional{angles.gamma2}, n);
      EXPECT_LT(max_probability_gap(end.k0.state, line0), 1e-10) << alpha << "," << beta;
      EXPECT_LT(max_probability_gap(end.kpi.state, line1), 1e-10) << alpha << "," << beta;
      EXPECT_LT(phase_aligned_distance(end.k0.state, line0), 1e-10);
      EXPECT_LT(phase_aligned_distance(end.kpi.state, line1), 1e-10);
    }
  }
}

TEST(sector_project, custom_rung_coin_shifts_both_angles) {
  AngleSource gen(23);
  for (int i = 0; i < 10; ++i) {
    const double a = gen.angle(), b = gen.angle(), gy = gen.angle();
    const auto init = LadderState::localized(34, gen.coin());
    const auto start = sector_project(init);
    const auto end = sector_project(evolve(init, Ladder{a, b, gy}, 32));
    const auto angles = effective_angles(a, b, gy);
    EXPECT_LT(phase_aligned_distance(end.k0.state,
                                     evolve(start.k0.state, Conventional{angles.gamma1}, 32)),
              1e-10);
    EXPECT_LT(phase_aligned_distance(end.kpi.state,
                                     evolve(start.kpi.state, Conventional{angles.gamma2}, 32)),
              1e-10);
  }
}

TEST(sector_project, weights_are_conserved) {
  AngleSource gen(29);
  for (int i = 0; i < 10; ++i) {
    const Ladder spec{gen.angle(), gen.angle()};
    auto s = LadderState::localized(42, gen.coin(), static_cast<int>(gen.integer(0, 1)));
    const auto w0 = sector_project(s).weights();
    for (int n = 0; n < 40; ++n) {
      s = step_ladder(s, spec);
      const auto w = sector_project(s).weights();
      EXPECT_NEAR(w[0], w0[0], 1e-10);
      EXPECT_NEAR(w[1], w0[1], 1e-10);
    }
  }
}

TEST(ladder_regimes, one_sided_at_beta_pi) {
  AngleSource gen(31);
  for (double beta : {kPi, -kPi}) {
    const double alpha = gen.angle();
    auto s = LadderState::localized(102);
    for (int n = 1; n <= 100; ++n) {
      s = step_ladder(s, Ladder{alpha, beta});
      EXPECT_LT(side_marginals(s).masses()[1], 1e-10);
    }
  }
}

TEST(ladder_regimes, alternating_at_beta_zero) {
  AngleSource gen(37);
  const double alpha = gen.angle();
  auto s = LadderState::localized(66);
  for (int n = 1; n <= 64; ++n) {
    s = step_ladder(s, Ladder{alpha, 0.0});
    const auto masses = side_marginals(s).masses();
    EXPECT_NEAR(masses[n % 2], 1.0, 1e-12);
    EXPECT_EQ(masses[(n + 1) % 2], 0.0);
  }
}

TEST(classify_pattern, table_rows) {
  AngleSource gen(41);
  for (int i = 0; i < 20; ++i) {
    const double alpha = gen.angle();
    EXPECT_EQ(classify_pattern(alpha, 0.0), WalkPattern::Alternating);
    EXPECT_EQ(classify_pattern(alpha, kTwoPi), WalkPattern::Alternating);
    EXPECT_EQ(classify_pattern(alpha, kPi), WalkPattern::OneSided);
    EXPECT_EQ(classify_pattern(alpha, -kPi), WalkPattern::OneSided);
  }
  EXPECT_EQ(classify_pattern(-kPi / 4, kPi / 4), WalkPattern::IdenticalDominated);
  EXPECT_EQ(classify_pattern(-kPi / 4, 3 * kPi / 4), WalkPattern::IdenticalDominated);
  EXPECT_EQ(classify_pattern(-kPi / 4, -3 * kPi / 4), WalkPattern::IdenticalDominated);
  EXPECT_EQ(classify_pattern(kPi / 2, 0.3), WalkPattern::HadamardDegenerate);
  EXPECT_EQ(classify_pattern(-kPi / 2, 1.1), WalkPattern::HadamardDegenerate);
  EXPECT_EQ(classify_pattern(-kPi / 4, kPi / 2), WalkPattern::Generic);
  // Listed order breaks ties: beta = 0 wins over alpha = pi/2.
  EXPECT_EQ(classify_pattern(kPi / 2, 0.0), WalkPattern::Alternating);
  EXPECT_EQ(classify_pattern(kPi / 2, kPi), WalkPattern::OneSided);
  EXPECT_EQ(classify_pattern(kPi / 2, kPi / 2), WalkPattern::HadamardDegenerate);
  EXPECT_EQ(to_string(WalkPattern::IdenticalDominated), "identical");
}
