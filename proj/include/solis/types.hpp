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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace solis {

using Real = double;
using Complex = std::complex<Real>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXd = Vector<Real>;
using VectorXcd = Vector<Complex>;
using MatrixXd = Matrix<Real>;
using MatrixXcd = Matrix<Complex>;
using Matrix2cd = Eigen::Matrix2cd;
using Matrix4d = Eigen::Matrix4d;

inline constexpr Complex kImag{0.0, 1.0};

/// Bad user input (config syntax, invalid values, unknown flags).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The request is well-formed but the model violates a precondition
/// (not solvable, gap conditions fail, subspace leak detected).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problem size exceeds a hard resource cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace solis
