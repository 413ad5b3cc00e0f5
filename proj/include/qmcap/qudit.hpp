// Copyright 2026 The qmcap Authors
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

#include <cstdint>

#include "qmcap/numerics.hpp"

namespace qmcap {

bool is_prime(int d);

/// Local dimension d and qudit count n of a register.
struct QuditParams {
  int d = 0;
  int n = 0;

  /// Validates d prime, n >= 1 and d^n <= 343. d = 2 is accepted so that the
  /// parameter listing can show it has no nontrivial beam splitter, but every
  /// phase-space construction rejects it.
  static QuditParams make(int d, int n = 1);

  Index dim() const;
  /// (d + 1) / 2, the multiplicative inverse of 2 mod d.
  int inverse_two() const { return (d + 1) / 2; }
  int mod(std::int64_t v) const {
    std::int64_t r = v % d;
    return static_cast<int>(r < 0 ? r + d : r);
  }

  bool operator==(const QuditParams&) const = default;
};

/// Throws kUnsupported unless d is an odd prime.
void require_odd_prime(const QuditParams& params, const char* what);

/// The d-th roots of unity, omega^k for k in [0, d).
std::vector<Complex> roots_of_unity(int d);

}  // namespace qmcap
