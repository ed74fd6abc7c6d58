// Copyright 2026 The solis authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "solis/types.hpp"

namespace solis {

struct OdeOptions {
  Real rtol = 1e-9;
  Real atol = 1e-12;
  std::uint64_t max_steps = 100'000'000;
};

namespace detail {

template <typename State>
Real scaled_error_norm(const State& err, const State& y0, const State& y1, Real rtol, Real atol) {
  const auto scale = (atol + rtol * y0.array().abs().max(y1.array().abs())).eval();
  const Real sq = (err.array().abs() / scale).square().sum();
  return std::sqrt(sq / static_cast<Real>(err.size()));
}

}  // namespace detail

/// Dormand-Prince 5(4) with PI-free step control and FSAL. Integrates from
/// t0 through the sorted sample `times`, clamping steps to land exactly on
/// each sample; the step-size memory carries across samples (no restarts).
/// Calls observe(sample_index, state) at every sample time.
template <typename State, typename Rhs, typename Observer>
void integrate_at_times(Rhs&& rhs, State y, Real t0, const std::vector<Real>& times,
                        Observer&& observe, const OdeOptions& opt = {}) {
  if (times.empty()) return;

  State k1 = y, k2 = y, k3 = y, k4 = y, k5 = y, k6 = y, k7 = y;
  State ytmp = y, y5 = y, yerr = y;

  Real t = t0;
  rhs(t, y, k1);

  // Initial step: a standard two-probe heuristic.
  Real h;
  {
    const Real span = std::max(times.back() - t0, 1e-30);
    const Real d0 = std::sqrt(y.array().abs().square().sum());
    const Real d1 = std::sqrt(k1.array().abs().square().sum());
    Real h0 = (d0 < 1e-10 || d1 < 1e-10) ? 1e-6 * span : 0.01 * d0 / d1;
    h0 = std::min(h0, span);
    ytmp = y + h0 * k1;
    rhs(t + h0, ytmp, k2);
    const Real d2 = std::sqrt((k2 - k1).array().abs().square().sum()) / h0;
    const Real dmax = std::max(d1, d2);
    const Real h1 = dmax < 1e-15 ? std::max(1e-6 * span, h0 * 1e-3)
                                 : std::pow(0.01 / dmax, 0.2);
    h = std::min({100 * h0, h1, span});
  }

  std::size_t next_sample = 0;
  // Emit any samples at (or numerically before) the start time.
  while (next_sample < times.size() && times[next_sample] <= t + 1e-14 * std::abs(t)) {
    observe(next_sample, y);
    ++next_sample;
  }

  std::uint64_t steps = 0;
  while (next_sample < times.size()) {
    const Real target = times[next_sample];
    bool hit_target = false;
    Real h_try = h;
    if (t + h_try >= target) {
      h_try = target - t;
      hit_target = true;
    }
    if (h_try <= 0) {
      observe(next_sample, y);
      ++next_sample;
      continue;
    }

    // Dormand-Prince stages.
    ytmp = y + h_try * (0.2 * k1);
    rhs(t + 0.2 * h_try, ytmp, k2);
    ytmp = y + h_try * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * k2);
    rhs(t + 0.3 * h_try, ytmp, k3);
    ytmp = y + h_try * ((44.0 / 45.0) * k1 - (56.0 / 15.0) * k2 + (32.0 / 9.0) * k3);
    rhs(t + 0.8 * h_try, ytmp, k4);
    ytmp = y + h_try * ((19372.0 / 6561.0) * k1 - (25360.0 / 2187.0) * k2 +
                        (64448.0 / 6561.0) * k3 - (212.0 / 729.0) * k4);
    rhs(t + (8.0 / 9.0) * h_try, ytmp, k5);
    ytmp = y + h_try * ((9017.0 / 3168.0) * k1 - (355.0 / 33.0) * k2 +
                        (46732.0 / 5247.0) * k3 + (49.0 / 176.0) * k4 -
                        (5103.0 / 18656.0) * k5);
    rhs(t + h_try, ytmp, k6);
    y5 = y + h_try * ((35.0 / 384.0) * k1 + (500.0 / 1113.0) * k3 + (125.0 / 192.0) * k4 -
                      (2187.0 / 6784.0) * k5 + (11.0 / 84.0) * k6);
    rhs(t + h_try, y5, k7);
    yerr = h_try * ((71.0 / 57600.0) * k1 - (71.0 / 16695.0) * k3 + (71.0 / 1920.0) * k4 -
                    (17253.0 / 339200.0) * k5 + (22.0 / 525.0) * k6 - (1.0 / 40.0) * k7);

    const Real err = detail::scaled_error_norm(yerr, y, y5, opt.rtol, opt.atol);
    if (err <= 1.0) {
      t = hit_target ? target : t + h_try;
      y.swap(y5);
      k1.swap(k7);  // first-same-as-last
      if (hit_target) {
        observe(next_sample, y);
        ++next_sample;
        // Duplicated sample times collapse onto the same state.
        while (next_sample < times.size() && times[next_sample] <= t) {
          observe(next_sample, y);
          ++next_sample;
        }
      }
      const Real factor =
          err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      const Real h_next = h_try * factor;
      // A step clamped onto a sample time must not shrink the step memory.
      h = hit_target ? std::max(h, h_next) : h_next;
    } else {
      h = h_try * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
    }
    if (++steps > opt.max_steps)
      throw ResourceError("integrate_at_times: exceeded max step count");
    if (h < 1e-15 * std::max(1.0, std::abs(t)))
      throw ResourceError("integrate_at_times: step size underflow");
  }
}

}  // namespace solis
