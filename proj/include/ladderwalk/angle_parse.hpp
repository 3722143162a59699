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
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ladderwalk/angles.hpp"

namespace ladderwalk {

namespace detail {

inline double parse_real(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
  }
  return value;
}

// "a", "a/b", "", "-", "+".
inline double parse_coefficient(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_real(text, whole);
  const double num = parse_coefficient(text.substr(0, slash), whole);
  const double den = parse_real(text.substr(slash + 1), whole);
  if (den == 0.0) throw std::invalid_argument("zero denominator in angle '" + std::string(whole) + "'");
  return num / den;
}

}  // namespace detail

/// Parses an angle in radians. Accepts plain reals ("0.785") and rational
/// multiples of pi: "pi", "-pi", "-1/4pi", "3pi/4", "-3*pi/4", "0.5pi".
inline double parse_angle(std::string_view input) {
  std::string s;
  for (char ch : input) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') continue;
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (s.empty()) throw std::invalid_argument("empty angle");
  const auto at = s.find("pi");
  double value = 0.0;
  if (at == std::string::npos) {
    value = detail::parse_real(s, input);
  } else {
    const std::string_view view(s);
    const double coef = detail::parse_coefficient(view.substr(0, at), input);
    const auto suffix = view.substr(at + 2);
    double den = 1.0;
    if (!suffix.empty()) {
      if (suffix.front() != '/') {
        throw std::invalid_argument("cannot parse angle '" + std::string(input) + "'");
      }
      den = detail::parse_real(suffix.substr(1), input);
      if (den == 0.0) {
        throw std::invalid_argument("zero denominator in angle '" + std::string(input) + "'");
      }
    }
    value = coef * kPi / den;
  }
  require_finite_angle(value, "angle");
  return value;
}

}  // namespace ladderwalk
