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

#include <stdexcept>
#include <string>

namespace ladderwalk {

/// Thrown when a shift would push amplitude onto (or past) the lattice edge.
/// The lattice never wraps along the open direction; callers must enlarge it.
class LatticeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form eigensystem requested for a coin that is the identity up to sign.
class DegenerateCoin : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Momentum ring too small to hold the evolved packet without aliasing.
class AliasingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity violated a conservation law or positivity bound.
class NumericInvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace detail
}  // namespace ladderwalk
