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
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ladderwalk/angles.hpp"
#include "ladderwalk/dataset.hpp"
#include "ladderwalk/density.hpp"
#include "ladderwalk/observables.hpp"
#include "ladderwalk/sector.hpp"
#include "ladderwalk/summary.hpp"
#include "ladderwalk/walk.hpp"

namespace ladderwalk {

/// Probability conservation tolerance enforced on emitted data.
inline constexpr double kEmittedNormTolerance = 1e-9;

/// Inclusive, evenly spaced grid; a single point when count == 1.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  long count = 1;

  std::vector<double> values() const {
    detail::require(count >= 1, "grid count must be at least 1");
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
      v.push_back(start);
      return v;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (long i = 0; i < count; ++i) v.push_back(start + step * static_cast<double>(i));
    v.back() = stop;
    return v;
  }
};

struct ExperimentConfig {
  double gamma = kPi / 2.0;
  double alpha = -kPi / 4.0;
  double beta = 0.0;
  double gamma_y = kDefaultLadderGammaY;
  long steps = 31;
  /// Lattice half-width; defaults to steps + 2.
  std::optional<long> half_width;
  double initial_theta = 0.0;
  double initial_phi = 0.0;
  std::optional<Grid> alpha_grid;
  std::optional<Grid> beta_grid;
  std::optional<Grid> gamma_grid;
  /// Emit the position distribution of every step, not only the last one.
  bool all_steps = true;
  unsigned threads = 0;

  long lattice_half_width() const { return half_width.value_or(steps + 2); }
  CoinSpinor initial_coin() const { return CoinSpinor::from_bloch(initial_theta, initial_phi); }

  void validate() const {
    for (double a : {gamma, alpha, beta, gamma_y, initial_theta, initial_phi}) {
      require_finite_angle(a, "angle");
    }
    detail::require(steps >= 0, "steps must be nonnegative");
    detail::require(lattice_half_width() > steps + 1, "lattice half-width must exceed steps + 1");
    for (const auto& g : {alpha_grid, beta_grid, gamma_grid}) {
      if (!g) continue;
      detail::require(g->count >= 1, "grid count must be at least 1");
      require_finite_angle(g->start, "grid start");
      require_finite_angle(g->stop, "grid stop");
    }
  }

  Grid alpha_points() const { return alpha_grid.value_or(Grid{alpha, alpha, 1}); }
  Grid beta_points() const { return beta_grid.value_or(Grid{-kPi, kPi, 65}); }
  Grid gamma_points() const { return gamma_grid.value_or(Grid{0.0, kPi, 65}); }
};

namespace detail {

inline void check_emitted_norm(double total, long step) {
  if (!(std::abs(total - 1.0) <= kEmittedNormTolerance)) {
    throw NumericInvariantError("total probability " + std::to_string(total) + " at step " +
                                std::to_string(step));
  }
}

}  // namespace detail

/// Line walk with the conventional coin.
///
/// Tables: `distribution` (step, m, p_up, p_down, probability; rows with zero
/// probability are omitted) and `series` (step, total_probability,
/// second_moment, rho11, rho22, rho12_re, rho12_im, entropy).
inline Dataset run_walk1d(const ExperimentConfig& cfg) {
  cfg.validate();
  Dataset ds{"walk1d", {}};
  Table dist{"distribution", {"step", "m", "p_up", "p_down", "probability"}, {}};
  Table series{"series",
               {"step", "total_probability", "second_moment", "rho11", "rho22", "rho12_re",
                "rho12_im", "entropy"},
               {}};

  auto state = WalkerState1D::localized(cfg.lattice_half_width(), cfg.initial_coin());
  const auto coin = make_coin(cfg.gamma);
  for (long step = 0; step <= cfg.steps; ++step) {
    if (step > 0) {
      detail::conventional_inplace(state, coin);
      state.set_steps_taken(step);
    }
    const auto p = position_distribution(state);
    const double total = p.total();
    detail::check_emitted_norm(total, step);
    if (cfg.all_steps || step == cfg.steps) {
      for (long m = -state.half_width(); m <= state.half_width(); ++m) {
        const double pu = std::norm(state.at(Spin::Up, m));
        const double pd = std::norm(state.at(Spin::Down, m));
        if (pu + pd == 0.0) continue;
        dist.add_row({step, m, pu, pd, pu + pd});
      }
    }
    const auto rho = finite_n_rho(state);
    series.add_row({step, total, second_moment(p, state.origin()), rho.rho11, rho.rho22,
                    rho.rho12.real(), rho.rho12.imag(), entropy(rho)});
  }
  ds.tables.push_back(std::move(dist));
  ds.tables.push_back(std::move(series));
  return ds;
}

inline Table summary_table(const WalkSummary& w, double gamma_y) {
  Table t{"summary",
          {"alpha", "beta", "gamma_y", "gamma1", "gamma2", "phi", "m1", "m2", "m", "d1", "d2", "s1",
           "s2", "s_joint", "mutual_information", "pattern"},
          {}};
  t.add_row({w.alpha, w.beta, gamma_y, w.angles.gamma1, w.angles.gamma2, w.angles.phi,
             w.magnetization.m1, w.magnetization.m2, w.magnetization.m, w.d1, w.d2, w.s1, w.s2,
             w.s_joint, w.mutual_information, std::string(to_string(w.pattern))});
  return t;
}

/// Ladder walk started on side 0.
///
/// Tables: `distribution` (step, side, y, probability; zero rows omitted),
/// `series` (step, side0_mass, side1_mass, weight_k0, weight_kpi,
/// side_profile_tv, total_probability) and `summary` (one row of analytic
/// quantities for the parameter point).
inline Dataset run_ladder(const ExperimentConfig& cfg) {
  cfg.validate();
  Dataset ds{"ladder", {}};
  Table dist{"distribution", {"step", "side", "y", "probability"}, {}};
  Table series{"series",
               {"step", "side0_mass", "side1_mass", "weight_k0", "weight_kpi", "side_profile_tv",
                "total_probability"},
               {}};

  const Ladder proto{cfg.alpha, cfg.beta, cfg.gamma_y};
  auto state = LadderState::localized(cfg.lattice_half_width(), cfg.initial_coin());
  const detail::LadderCoins coins{make_coin(proto.alpha), make_coin(proto.beta),
                                  make_coin(proto.gamma_y)};
  for (long step = 0; step <= cfg.steps; ++step) {
    if (step > 0) {
      detail::ladder_inplace(state, coins);
      state.set_steps_taken(step);
    }
    const auto marg = side_marginals(state);
    const auto masses = marg.masses();
    const double total = masses[0] + masses[1];
    detail::check_emitted_norm(total, step);
    if (cfg.all_steps || step == cfg.steps) {
      for (int x = 0; x < 2; ++x) {
        for (std::size_t i = 0; i < marg.side[x].size(); ++i) {
          const double p = marg.side[x][i];
          if (p == 0.0) continue;
          dist.add_row({step, static_cast<long>(x), marg.first_rung + static_cast<long>(i), p});
        }
      }
    }
    const auto sectors = sector_project(state);
    series.add_row({step, masses[0], masses[1], sectors.k0.weight, sectors.kpi.weight,
                    total_variation(marg.normalized(0), marg.normalized(1)), total});
  }
  ds.tables.push_back(std::move(dist));
  ds.tables.push_back(std::move(series));
  ds.tables.push_back(summary_table(walk_summary(cfg.alpha, cfg.beta, cfg.gamma_y), cfg.gamma_y));
  return ds;
}

/// Analytic sweep over the (alpha, beta) grid, one row per point in
/// alpha-major order. Points are evaluated concurrently.
///
/// A second table, `coin`, lists the asymptotic single-walker coin state
/// against the coin angle (gamma, rho11, rho22, rho12, entropy, m, d).
inline Dataset run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto alphas = cfg.alpha_points().values();
  const auto betas = cfg.beta_points().values();
  const std::size_t total = alphas.size() * betas.size();
  std::vector<WalkSummary> results(total);

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < total; i += workers) {
          results[i] = walk_summary(alphas[i / betas.size()], betas[i % betas.size()]);
        }
      });
    }
  }

  Table t{"sweep",
          {"alpha", "beta", "gamma1", "gamma2", "m1", "m2", "m", "d1", "d2", "s1", "s2", "s_joint",
           "mutual_information", "pattern"},
          {}};
  for (const auto& w : results) {
    t.add_row({w.alpha, w.beta, w.angles.gamma1, w.angles.gamma2, w.magnetization.m1,
               w.magnetization.m2, w.magnetization.m, w.d1, w.d2, w.s1, w.s2, w.s_joint,
               w.mutual_information, std::string(to_string(w.pattern))});
  }

  Table coin{"coin", {"gamma", "rho11", "rho22", "rho12", "entropy", "m", "d"}, {}};
  for (double g : cfg.gamma_points().values()) {
    const auto rho = asymptotic_rho(g);
    coin.add_row({g, rho.rho11, rho.rho22, rho.rho12.real(), entropy(rho), magnetization(g),
                  discriminant(reduce_angle(g))});
  }
  return {"sweep", {std::move(t), std::move(coin)}};
}

// --- Walk-pattern table ------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Table1Report {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

inline constexpr long kTable1Steps = 64;
inline constexpr double kTable1Alpha = -kPi / 4.0;

namespace detail {

inline std::vector<LadderState> ladder_trajectory(double alpha, double beta, long steps) {
  std::vector<LadderState> out;
  auto state = LadderState::localized(steps + 2);
  const LadderCoins coins{make_coin(alpha), make_coin(beta), make_coin(kDefaultLadderGammaY)};
  out.push_back(state);
  for (long n = 1; n <= steps; ++n) {
    ladder_inplace(state, coins);
    state.set_steps_taken(n);
    out.push_back(state);
  }
  return out;
}

inline std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Side profiles agree on every rung where the classical-like sector is empty:
// side0 - side1 = 2 Re(a conj(b)) vanishes wherever b does. Returns the largest
// difference and the number of occupied rungs it was taken over.
inline std::pair<double, long> identical_outside_confined(const LadderState& state,
                                                          bool confined_is_kpi) {
  constexpr double kConfinedEmpty = 1e-24;
  const auto sectors = sector_project(state);
  const auto& confined = confined_is_kpi ? sectors.kpi : sectors.k0;
  const auto joint = position_distribution(state);
  double worst = 0.0;
  long compared = 0;
  for (long y = -state.half_width(); y <= state.half_width(); ++y) {
    if (confined.weight * confined.state.spinor(y).norm_squared() > kConfinedEmpty) continue;
    if (joint.at(0, y) + joint.at(1, y) == 0.0) continue;
    worst = std::max(worst, std::abs(joint.at(0, y) - joint.at(1, y)));
    ++compared;
  }
  return {worst, compared};
}

}  // namespace detail

/// Checks every row of the walk-pattern table at alpha = -pi/4, combining the
/// analytic magnetizations with 64-step ladder simulations.
inline Table1Report run_table1() {
  Table1Report report;
  const double alpha = kTable1Alpha;
  const long n = kTable1Steps;

  {
    const double beta = 0.0;
    const auto w = walk_summary(alpha, beta);
    const auto traj = detail::ladder_trajectory(alpha, beta, n);
    double worst = 0.0;
    for (long t = 0; t <= n; ++t) {
      const auto masses = side_marginals(traj[static_cast<std::size_t>(t)]).masses();
      worst = std::max(worst, masses[static_cast<std::size_t>((t + 1) % 2)]);
    }
    const bool ok = w.pattern == WalkPattern::Alternating &&
                    std::abs(w.magnetization.m1 - w.magnetization.m2) <= 1e-12 &&
                    worst < kNormTolerance;
    report.checks.push_back({"beta=0 alternating", ok,
                             "pattern=" + std::string(to_string(w.pattern)) +
                                 " max mass off the expected side=" + detail::fmt(worst)});
  }
  {
    const double beta = kPi;
    const auto w = walk_summary(alpha, beta);
    const auto traj = detail::ladder_trajectory(alpha, beta, n);
    double worst = 0.0;
    for (const auto& s : traj) worst = std::max(worst, side_marginals(s).masses()[1]);
    const bool ok = w.pattern == WalkPattern::OneSided &&
                    std::abs(w.magnetization.m1 - w.magnetization.m2) <= 1e-12 &&
                    std::abs(w.magnetization.m - w.magnetization.m1) <= 1e-12 &&
                    worst < kNormTolerance;
    report.checks.push_back({"beta=pi one-sided", ok,
                             "pattern=" + std::string(to_string(w.pattern)) +
                                 " max off-side mass=" + detail::fmt(worst)});
  }
  {
    const double beta = kPi / 4.0;
    const auto w = walk_summary(alpha, beta);
    const auto traj = detail::ladder_trajectory(alpha, beta, n);
    const auto [diff, compared] = detail::identical_outside_confined(traj.back(), true);
    const bool ok = w.pattern == WalkPattern::IdenticalDominated &&
                    std::abs(w.magnetization.m2) <= 1e-12 && diff < kNormTolerance &&
                    compared >= n / 2;
    report.checks.push_back({"beta=pi/4 identical (M2=0)", ok,
                             "M2=" + detail::fmt(w.magnetization.m2) +
                                 " max side difference off the confined sector=" +
                                 detail::fmt(diff) + " over " + std::to_string(compared) +
                                 " rungs"});
  }
  {
    const double beta = 3.0 * kPi / 4.0;
    const auto w = walk_summary(alpha, beta);
    const auto traj = detail::ladder_trajectory(alpha, beta, n);
    const auto [diff, compared] = detail::identical_outside_confined(traj.back(), false);
    const bool ok = w.pattern == WalkPattern::IdenticalDominated &&
                    std::abs(w.magnetization.m1 - 1.0) <= 1e-12 && diff < kNormTolerance &&
                    compared >= n / 2;
    report.checks.push_back({"beta=3pi/4 identical (M1=1)", ok,
                             "M1=" + detail::fmt(w.magnetization.m1) +
                                 " max side difference off the confined sector=" +
                                 detail::fmt(diff) + " over " + std::to_string(compared) +
                                 " rungs"});
  }
  return report;
}

}  // namespace ladderwalk
