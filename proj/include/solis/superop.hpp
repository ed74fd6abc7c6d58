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

#include <functional>

#include "solis/pauli.hpp"

namespace solis {

/// An operator-to-operator map on dense 2^n x 2^n matrices.
using OperatorMap = std::function<MatrixXcd(const MatrixXcd&)>;

/// Coefficients with |imag| below this are exact zeros of hermiticity-
/// preserving maps and are truncated so structural checks stay exact.
inline constexpr Real kImagDustTolerance = 1e-12;

/// Matrix of `action` in the Pauli-string basis: column nu holds the
/// expansion coefficients of action(nu_hat). Dense, so capped at n <= 7.
///
/// Linearity is spot-checked on random basis pairs (throws DomainError on
/// failure). If every entry's imaginary part is below kImagDustTolerance
/// the whole matrix is truncated to exactly real.
MatrixXcd superop_to_pauli_basis(const OperatorMap& action, int n_sites);

/// As above, but requires the truncation to fire (the map must be
/// hermiticity preserving) and returns the real matrix.
MatrixXd superop_to_pauli_basis_real(const OperatorMap& action, int n_sites);

}  // namespace solis
