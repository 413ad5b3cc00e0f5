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

#include "qmcap/optimize.hpp"

#include <cmath>

namespace qmcap {

RealVector maximize(const Objective& f, RealVector x, Rng& rng, const AscentOptions& options, AscentTrace& trace,
                    const Gradient& gradient) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Index n = x.size();
  double fx = f(x);
  trace = AscentTrace{};
  trace.start_value = fx;
  trace.evaluations = 1;
  trace.history.push_back(fx);
  double step = options.initial_step;

  int it = 0;
  for (; it < options.iterations && step >= options.min_step; ++it) {
    RealVector dir(n);
    for (Index k = 0; k < n; ++k) dir(k) = normal(rng);
    dir.normalize();
    bool improved = false;
    for (double sign : {1.0, -1.0}) {
      RealVector trial = x + sign * step * dir;
      double ft = f(trial);
      ++trace.evaluations;
      if (ft > fx) {
        x = std::move(trial);
        fx = ft;
        improved = true;
        break;
      }
    }
    step *= improved ? options.grow : options.shrink;
    if ((it + 1) % options.history_stride == 0) trace.history.push_back(fx);
  }
  trace.iterations = it;
  trace.budget_exhausted = it >= options.iterations && step >= options.min_step;

  double h = options.fd_step;
  double rate = 1.0;
  for (int p = 0; p < options.polish_steps; ++p) {
    RealVector grad(n);
    if (gradient) {
      grad = gradient(x);
      ++trace.evaluations;
    } else {
      for (Index k = 0; k < n; ++k) {
        RealVector up = x;
        RealVector down = x;
        up(k) += h;
        down(k) -= h;
        grad(k) = (f(up) - f(down)) / (2 * h);
      }
      trace.evaluations += static_cast<int>(2 * n);
    }
    double norm = grad.norm();
    if (!(norm > 1e-12)) break;
    bool improved = false;
    for (int back = 0; back < 30; ++back) {
      RealVector trial = x + (rate / norm) * grad;
      double ft = f(trial);
      ++trace.evaluations;
      if (ft > fx) {
        x = std::move(trial);
        fx = ft;
        improved = true;
        rate *= 2;
        break;
      }
      rate *= 0.5;
    }
    if (!improved) break;
  }
  trace.history.push_back(fx);
  trace.best_value = fx;
  return x;
}

}  // namespace qmcap
