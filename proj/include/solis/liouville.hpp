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

#include <utility>
#include <vector>

#include "solis/model.hpp"
#include "solis/pauli.hpp"

namespace solis {

enum class Picture { Schrodinger, Adjoint };

/// 4x4 real matrix of one channel's dissipator on its site, basis (1, z, x, y).
/// The top row is identically zero (trace preservation).
Matrix4d site_dissipator_matrix(const Matrix2cd& jump, Real rate);

/// All channels at `site` summed into one matrix.
Matrix4d site_dissipator_matrix(const SpinModel& model, int site);

/// Terms of the generator ready for repeated application in the Pauli basis.
/// The matrix of the generator is real in this basis, so applications on real
/// and complex coefficient vectors share one code path.
struct PauliAction {
  int n_sites = 0;
  Real coherent_sign = 1.0;  // +1: -i[H,.] (Schrodinger); -1: +i[H,.] (adjoint)
  std::vector<Coupling> couplings;
  std::vector<std::pair<int, Real>> fields;                // (site, strength)
  std::vector<std::pair<int, Matrix4d>> site_dissipators;  // transposed for adjoint
};

PauliAction make_pauli_action(const SpinModel& model, Picture picture,
                              bool include_coherent = true, bool include_dissipative = true);

/// Enumerates the nonzero entries of the action's matrix column `nu`:
/// calls f(row_index, coefficient) for every contribution.
template <typename F>
void for_each_action_entry(const PauliAction& action, std::uint64_t nu, F&& f) {
  const int n = action.n_sites;
  auto digit_shift = [n](int site) { return 2 * (n - 1 - site); };
  // Bond terms: nonzero only when exactly one endpoint carries an x/y letter.
  // Multiplying both letters by z maps I<->Z and X<->Y, i.e. flips the low
  // bit of each base-4 digit; the surviving commutator weight is +-2h.
  for (const auto& c : action.couplings) {
    const int sj = digit_shift(c.j), sk = digit_shift(c.k);
    const std::uint64_t lj = (nu >> sj) & 3u, lk = (nu >> sk) & 3u;
    const bool xyj = lj >= 2, xyk = lk >= 2;
    if (xyj == xyk) continue;
    const std::uint64_t target = nu ^ (std::uint64_t{1} << sj) ^ (std::uint64_t{1} << sk);
    const std::uint64_t lxy = xyj ? lj : lk;
    const Real coeff = (lxy == 2 ? 2.0 : -2.0) * c.strength * action.coherent_sign;
    f(target, coeff);
  }
  for (const auto& [site, strength] : action.fields) {
    const int s = digit_shift(site);
    const std::uint64_t l = (nu >> s) & 3u;
    if (l < 2) continue;
    const std::uint64_t target = nu ^ (std::uint64_t{1} << s);
    f(target, (l == 2 ? 2.0 : -2.0) * strength * action.coherent_sign);
  }
  for (const auto& [site, mat] : action.site_dissipators) {
    const int s = digit_shift(site);
    const auto l = static_cast<Eigen::Index>((nu >> s) & 3u);
    const std::uint64_t base = nu & ~(std::uint64_t{3} << s);
    for (Eigen::Index a = 0; a < 4; ++a) {
      const Real coeff = mat(a, l);
      if (coeff != 0.0) f(base | (static_cast<std::uint64_t>(a) << s), coeff);
    }
  }
}

template <typename Scalar>
void apply_action(const PauliAction& action, const Vector<Scalar>& in, Vector<Scalar>& out) {
  out.setZero(in.size());
  const auto dim = static_cast<std::uint64_t>(in.size());
  for (std::uint64_t nu = 0; nu < dim; ++nu) {
    const Scalar v = in(static_cast<Eigen::Index>(nu));
    if (v == Scalar(0)) continue;
    for_each_action_entry(action, nu, [&](std::uint64_t row, Real coeff) {
      out(static_cast<Eigen::Index>(row)) += coeff * v;
    });
  }
}

template <typename Scalar>
Vector<Scalar> apply_liouvillian(const SpinModel& model, const Vector<Scalar>& coeffs,
                                 Picture picture) {
  const PauliAction action = make_pauli_action(model, picture);
  Vector<Scalar> out;
  apply_action(action, coeffs, out);
  return out;
}

/// Dense real matrix of the generator in the Pauli basis (n <= 7).
MatrixXd action_matrix_pauli(const PauliAction& action);
MatrixXd liouvillian_matrix_pauli(const SpinModel& model,
                                  Picture picture = Picture::Schrodinger);
/// The -i[H,.] part alone ("coherent") and the dissipator alone.
MatrixXd coherent_matrix_pauli(const SpinModel& model);
MatrixXd dissipator_matrix_pauli(const SpinModel& model);

/// op acting on one site, embedded in the 2^n computational basis.
MatrixXcd embed_single_site(const Matrix2cd& op, int site, int n_sites);

/// Column-stacking vectorized Liouvillian: d vec(rho)/dt = L vec(rho),
/// with vec stacking the columns of rho (n <= 6).
MatrixXcd liouvillian_matrix_vectorized(const SpinModel& model);

}  // namespace solis
