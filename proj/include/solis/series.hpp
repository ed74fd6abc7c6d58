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

#include <string>
#include <utility>
#include <vector>

#include "solis/pauli.hpp"
#include "solis/types.hpp"

namespace solis {

/// A product of single-site Pauli factors, e.g. sigma^x_2 sigma^y_5.
/// Labels use the mini-language "<axes>@<sites>": "z@3", "xy@2,5".
struct PauliObservable {
  std::vector<std::pair<int, PauliLetter>> factors;  // sorted by site, letters in {X,Y,Z}

  static PauliObservable parse(const std::string& label);
  static PauliObservable single(int site, PauliLetter p);
  static PauliObservable two_site(int site_a, PauliLetter a, int site_b, PauliLetter b);

  std::string label() const;
  std::vector<int> sites() const;
  /// The full-system Pauli string of this observable.
  PauliString to_string_on(int n_sites) const;
  void validate(int n_sites) const;
};

/// Sampled expectation values of one observable; stderrs filled for ensembles.
struct ObservableSeries {
  std::string label;
  std::vector<Real> times;  // units 1/J
  std::vector<Real> values;
  std::vector<Real> stderrs;  // empty unless this is an ensemble mean

  std::size_t size() const { return times.size(); }
};

/// n_times points spanning [0, t_max], endpoints included.
std::vector<Real> linspace_times(Real t_max, int n_times);

}  // namespace solis
