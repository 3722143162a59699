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
#include <string>
#include <utility>
#include <vector>

#include "ladderwalk/angles.hpp"
#include "ladderwalk/coin.hpp"
#include "ladderwalk/error.hpp"
#include "ladderwalk/lattice.hpp"

namespace ladderwalk {

/// One quasi-momentum block of the conventional walk, U(k) = T(k) C(gamma/2)
/// with T(k) = diag(e^{ik}, e^{-ik}).
struct MomentumMode {
  double k = 0.0;
  double omega = 0.0;
  CoinSpinor e_plus;
  CoinSpinor e_minus;
  cplx lambda_plus;   // e^{-i omega}
  cplx lambda_minus;  // e^{+i omega}
};

namespace detail {

// sin(omega) written without cancellation: 1 - c^2 cos^2 k = sin^2 k + s^2 cos^2 k.
inline double dispersion_sine(double s, double k) {
  return std::sqrt(std::sin(k) * std::sin(k) + s * s * std::cos(k) * std::cos(k));
}

}  // namespace detail

/// omega in [0, pi] with cos(omega) = cos(gamma/2) cos(k).
inline double dispersion(double gamma, double k) {
  require_finite_angle(gamma, "gamma");
  require_finite_angle(k, "k");
  const double c = std::cos(gamma / 2.0);
  const double s = std::sin(gamma / 2.0);
  return std::atan2(detail::dispersion_sine(s, k), c * std::cos(k));
}

/// 2x2 block U(k) as a row-major array.
inline std::array<cplx, 4> momentum_unitary(double gamma, double k) {
  const double c = std::cos(gamma / 2.0);
  const double s = std::sin(gamma / 2.0);
  const cplx ek = std::polar(1.0, k);
  const cplx emk = std::conj(ek);
  return {c * ek, -s * ek, s * emk, c * emk};
}

/// Closed-form eigensystem of U(k).
///
/// Each eigenvector is (u, v - w) / N with u = e^{ik}, v = e^{ik} cot(gamma/2),
/// w = lambda / sin(gamma/2), and N^2 = 2 [sin^2 omega +- cos(gamma/2) sin k sin omega]
/// / sin^2(gamma/2), upper sign for lambda = e^{-i omega}.
///
/// Evaluated as v - w = +-i A_{+-} / s with A_{+-} = sin omega +- c sin k. Since
/// A_+ A_- = s^2, the smaller of the two is recovered from the larger, which
/// keeps small coin angles accurate.
inline MomentumMode mode_eigensystem(double gamma, double k) {
  require_finite_angle(gamma, "gamma");
  require_finite_angle(k, "k");
  if (angles_congruent(gamma, 0.0)) {
    throw DegenerateCoin("coin angle is 0 mod 2*pi; the eigenbasis is the spin basis");
  }
  const double c = std::cos(gamma / 2.0);
  const double s = std::sin(gamma / 2.0);
  const double sin_w = detail::dispersion_sine(s, k);
  const double cos_w = c * std::cos(k);

  MomentumMode mode;
  mode.k = k;
  mode.omega = std::atan2(sin_w, cos_w);
  mode.lambda_plus = cplx(cos_w, -sin_w);
  mode.lambda_minus = cplx(cos_w, sin_w);

  const double cs = c * std::sin(k);
  double a_plus = sin_w + cs;
  double a_minus = sin_w - cs;
  if (a_plus >= a_minus) {
    a_minus = s * s / a_plus;
  } else {
    a_plus = s * s / a_minus;
  }
  const double two_sin_w = 2.0 * sin_w;
  const double sign = s > 0.0 ? 1.0 : -1.0;
  const cplx u = std::polar(1.0, k);
  // |e+> = (u sqrt(A-), i sgn(s) sqrt(A+)) / sqrt(2 sin omega), |e-> likewise with A+ <-> A-.
  mode.e_plus = {u * std::sqrt(a_minus / two_sin_w), cplx(0.0, sign * std::sqrt(a_plus / two_sin_w))};
  mode.e_minus = {u * std::sqrt(a_plus / two_sin_w), cplx(0.0, -sign * std::sqrt(a_minus / two_sin_w))};
  return mode;
}

/// Conventional walk evaluated in momentum space on a ring of L sites:
/// each k = 2 pi j / L block is raised to the n-th power through its spectral
/// decomposition, then transformed back to position space.
///
/// The walker starts at m = 0. L must be even and exceed 2n so that the
/// packet (support |m| <= n) does not wrap. The result lives on a line window
/// of half-width L/2.
inline WalkerState1D evolve_spectral(const CoinSpinor& initial, double gamma, long n, long ring_size) {
  require_finite_angle(gamma, "gamma");
  detail::require(n >= 0, "n must be nonnegative");
  if (ring_size % 2 != 0 || ring_size <= 2 * n) {
    throw AliasingError("ring size " + std::to_string(ring_size) +
                        " must be even and larger than 2n = " + std::to_string(2 * n));
  }
  const long L = ring_size;
  const bool degenerate = angles_congruent(gamma, 0.0);

  // psi~(k) = sum_m e^{ikm} psi(m); for a packet at the origin this is the coin itself.
  std::vector<cplx> up_k(static_cast<std::size_t>(L)), down_k(static_cast<std::size_t>(L));
  for (long j = 0; j < L; ++j) {
    const double k = kTwoPi * static_cast<double>(j) / static_cast<double>(L);
    cplx a, b;
    if (degenerate) {
      // U(k) = cos(gamma/2) diag(e^{ik}, e^{-ik}) with cos(gamma/2) = +-1.
      const double sign = std::cos(gamma / 2.0) > 0.0 ? 1.0 : -1.0;
      const double nn = static_cast<double>(n);
      const double phase_sign = (n % 2 == 0) ? 1.0 : sign;
      a = phase_sign * std::polar(1.0, k * nn) * initial.up;
      b = phase_sign * std::polar(1.0, -k * nn) * initial.down;
    } else {
      const auto mode = mode_eigensystem(gamma, k);
      // lambda^n = e^{-+i omega n}
      const auto project = [&](const CoinSpinor& e, double phase) {
        const cplx amp = std::conj(e.up) * initial.up + std::conj(e.down) * initial.down;
        const cplx lam_n = std::polar(1.0, phase * static_cast<double>(n));
        return std::pair{lam_n * amp * e.up, lam_n * amp * e.down};
      };
      const auto [pu, pd] = project(mode.e_plus, -mode.omega);
      const auto [mu, md] = project(mode.e_minus, mode.omega);
      a = pu + mu;
      b = pd + md;
    }
    up_k[static_cast<std::size_t>(j)] = a;
    down_k[static_cast<std::size_t>(j)] = b;
  }

  WalkerState1D out(L / 2, 0);
  const double inv_l = 1.0 / static_cast<double>(L);
  for (long m = -(L / 2 - 1); m <= L / 2 - 1; ++m) {
    cplx up{}, down{};
    for (long j = 0; j < L; ++j) {
      // e^{-ikm} with k m reduced exactly through the integer product j*m mod L.
      const long jm = ((j * m) % L + L) % L;
      const cplx phase = std::polar(1.0, -kTwoPi * static_cast<double>(jm) * inv_l);
      up += phase * up_k[static_cast<std::size_t>(j)];
      down += phase * down_k[static_cast<std::size_t>(j)];
    }
    out.at(Spin::Up, m) = up * inv_l;
    out.at(Spin::Down, m) = down * inv_l;
  }
  out.set_steps_taken(n);
  return out;
}

}  // namespace ladderwalk
