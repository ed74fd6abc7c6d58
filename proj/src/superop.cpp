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

#include "solis/superop.hpp"

#include <random>

namespace solis {

namespace {

void spot_check_linearity(const OperatorMap& action, int n_sites) {
  const std::uint64_t n_basis = pow4(n_sites);
  std::mt19937_64 rng(0x5eedu);
  std::uniform_int_distribution<std::uint64_t> pick(0, n_basis - 1);
  for (int trial = 0; trial < 3; ++trial) {
    const auto mu = PauliString::from_flat_index(pick(rng), n_sites);
    const auto nu = PauliString::from_flat_index(pick(rng), n_sites);
    const MatrixXcd a = pauli_string_matrix(mu);
    const MatrixXcd b = pauli_string_matrix(nu);
    const MatrixXcd sum_of_actions = action(a) + action(b);
    const MatrixXcd action_of_sum = action(a + b);
    const Real scale = std::max({1.0, sum_of_actions.norm(), action_of_sum.norm()});
    if ((action_of_sum - sum_of_actions).norm() > 1e-9 * scale)
      throw DomainError("superop_to_pauli_basis: action is not linear (failed on " +
                        mu.str() + " + " + nu.str() + ")");
  }
}

}  // namespace

MatrixXcd superop_to_pauli_basis(const OperatorMap& action, int n_sites) {
  if (n_sites > 7)
    throw ResourceError("superop_to_pauli_basis: dense representation capped at 7 sites");
  spot_check_linearity(action, n_sites);

  const auto n_basis = static_cast<Eigen::Index>(pow4(n_sites));
  MatrixXcd s(n_basis, n_basis);
  for (Eigen::Index nu = 0; nu < n_basis; ++nu) {
    const auto basis_elem =
        pauli_string_matrix(PauliString::from_flat_index(static_cast<std::uint64_t>(nu), n_sites));
    const OperatorVector image = expand(action(basis_elem));
    s.col(nu) = image.coeffs;
  }
  if (s.imag().cwiseAbs().maxCoeff() < kImagDustTolerance)
    s.imag().setZero();
  return s;
}

MatrixXd superop_to_pauli_basis_real(const OperatorMap& action, int n_sites) {
  const MatrixXcd s = superop_to_pauli_basis(action, n_sites);
  if (s.imag().cwiseAbs().maxCoeff() != 0.0)
    throw DomainError("superop_to_pauli_basis_real: map is not hermiticity preserving");
  return s.real();
}

}  // namespace solis
