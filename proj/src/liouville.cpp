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

#include "solis/liouville.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace solis {

Matrix4d site_dissipator_matrix(const Matrix2cd& jump, Real rate) {
  const Matrix2cd jd = jump.adjoint();
  const Matrix2cd jdj = jd * jump;
  Matrix4d d = Matrix4d::Zero();
  const PauliLetter basis[4] = {PauliLetter::I, PauliLetter::Z, PauliLetter::X, PauliLetter::Y};
  for (int col = 0; col < 4; ++col) {
    const Matrix2cd sigma = pauli_matrix(basis[col]);
    const Matrix2cd image = rate * (jump * sigma * jd - 0.5 * (jdj * sigma + sigma * jdj));
    for (int row = 0; row < 4; ++row) {
      const Complex coeff = 0.5 * (pauli_matrix(basis[row]) * image).trace();
      if (std::abs(coeff.imag()) > kImagDustTolerance * std::max(1.0, rate * jump.squaredNorm()))
        throw DomainError("site_dissipator_matrix: non-real Pauli-basis entry");
      d(row, col) = coeff.real();
    }
  }
  return d;
}

Matrix4d site_dissipator_matrix(const SpinModel& model, int site) {
  Matrix4d d = Matrix4d::Zero();
  for (const auto& jump : model.jumps)
    if (jump.site == site) d += site_dissipator_matrix(jump.op, jump.rate);
  return d;
}

PauliAction make_pauli_action(const SpinModel& model, Picture picture, bool include_coherent,
                              bool include_dissipative) {
  PauliAction action;
  action.n_sites = model.n_sites;
  action.coherent_sign = picture == Picture::Schrodinger ? 1.0 : -1.0;
  if (include_coherent) {
    action.couplings = model.couplings;
    for (int j = 0; j < model.n_sites; ++j)
      if (model.field(j) != 0.0) action.fields.emplace_back(j, model.field(j));
  }
  if (include_dissipative) {
    for (int j = 0; j < model.n_sites; ++j) {
      Matrix4d d = site_dissipator_matrix(model, j);
      if (d.isZero(0.0)) continue;
      if (picture == Picture::Adjoint) d.transposeInPlace();
      action.site_dissipators.emplace_back(j, d);
    }
  }
  return action;
}

MatrixXd action_matrix_pauli(const PauliAction& action) {
  if (action.n_sites > 7)
    throw ResourceError("action_matrix_pauli: dense representation capped at 7 sites");
  const auto dim = static_cast<Eigen::Index>(pow4(action.n_sites));
  MatrixXd mat = MatrixXd::Zero(dim, dim);
  for (std::uint64_t nu = 0; nu < static_cast<std::uint64_t>(dim); ++nu)
    for_each_action_entry(action, nu, [&](std::uint64_t row, Real coeff) {
      mat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(nu)) += coeff;
    });
  return mat;
}

MatrixXd liouvillian_matrix_pauli(const SpinModel& model, Picture picture) {
  return action_matrix_pauli(make_pauli_action(model, picture));
}

MatrixXd coherent_matrix_pauli(const SpinModel& model) {
  return action_matrix_pauli(make_pauli_action(model, Picture::Schrodinger, true, false));
}

MatrixXd dissipator_matrix_pauli(const SpinModel& model) {
  return action_matrix_pauli(make_pauli_action(model, Picture::Schrodinger, false, true));
}

MatrixXcd embed_single_site(const Matrix2cd& op, int site, int n_sites) {
  const auto left = static_cast<Eigen::Index>(std::uint64_t{1} << site);
  const auto right = static_cast<Eigen::Index>(std::uint64_t{1} << (n_sites - 1 - site));
  const MatrixXcd mid =
      Eigen::kroneckerProduct(MatrixXcd::Identity(left, left), op).eval();
  return Eigen::kroneckerProduct(mid, MatrixXcd::Identity(right, right)).eval();
}

MatrixXcd liouvillian_matrix_vectorized(const SpinModel& model) {
  if (model.n_sites > 6)
    throw ResourceError("liouvillian_matrix_vectorized: dense representation capped at 6 sites");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << model.n_sites);
  const MatrixXcd eye = MatrixXcd::Identity(dim, dim);
  const MatrixXcd h = hamiltonian_dense(model);

  MatrixXcd l = -kImag * (Eigen::kroneckerProduct(eye, h).eval() -
                          Eigen::kroneckerProduct(h.transpose(), eye).eval());
  for (const auto& jump : model.jumps) {
    const MatrixXcd j_full = embed_single_site(jump.op, jump.site, model.n_sites);
    const MatrixXcd jdj = j_full.adjoint() * j_full;
    l += jump.rate * (Eigen::kroneckerProduct(j_full.conjugate(), j_full).eval() -
                      0.5 * Eigen::kroneckerProduct(eye, jdj).eval() -
                      0.5 * Eigen::kroneckerProduct(jdj.transpose(), eye).eval());
  }
  return l;
}

}  // namespace solis
