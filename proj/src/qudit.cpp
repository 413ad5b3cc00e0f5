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

#include "qmcap/qudit.hpp"

#include <numbers>
#include <string>

#include "qmcap/error.hpp"

namespace qmcap {

bool is_prime(int d) {
  if (d < 2) {
    return false;
  }
  for (int k = 2; k * k <= d; ++k) {
    if (d % k == 0) {
      return false;
    }
  }
  return true;
}

QuditParams QuditParams::make(int d, int n) {
  if (!is_prime(d)) {
    throw_error(ErrorCode::kInvalidArgument, "d = " + std::to_string(d) + " is not prime");
  }
  if (n < 1) {
    throw_error(ErrorCode::kInvalidArgument, "n must be at least 1");
  }
  std::int64_t dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= d;
    if (dim > 343) {
      throw_error(ErrorCode::kUnsupported,
                  "d^n = " + std::to_string(d) + "^" + std::to_string(n) + " exceeds the supported 343");
    }
  }
  return QuditParams{d, n};
}

Index QuditParams::dim() const {
  Index out = 1;
  for (int k = 0; k < n; ++k) {
    out *= d;
  }
  return out;
}

void require_odd_prime(const QuditParams& params, const char* what) {
  if (params.d == 2 || !is_prime(params.d)) {
    throw_error(ErrorCode::kUnsupported,
                std::string(what) + ": phase-space operators need an odd prime d, got " + std::to_string(params.d));
  }
}

std::vector<Complex> roots_of_unity(int d) {
  std::vector<Complex> out(d);
  for (int k = 0; k < d; ++k) {
    out[k] = std::polar(1.0, 2 * std::numbers::pi * k / d);
  }
  return out;
}

}  // namespace qmcap
