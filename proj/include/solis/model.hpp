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

#include <optional>
#include <string>
#include <vector>

#include "solis/pauli.hpp"
#include "solis/types.hpp"

namespace solis {

/// One Ising bond. `strength` is the TOTAL coefficient of sigma^z_j sigma^z_k
/// in the Hamiltonian (no implicit double counting of ordered pairs).
struct Coupling {
  int j = 0;
  int k = 0;
  Real strength = 0;
};

/// A single dissipative channel: a 2x2 jump operator acting on one site.
struct JumpChannel {
  int site = 0;
  Matrix2cd op = Matrix2cd::Zero();
  Real rate = 0;
};

/// An Ising-type spin-1/2 model with z-diagonal Hamiltonian
///   H = sum_pairs strength_{jk} sigma^z_j sigma^z_k + sum_j field_j sigma^z_j
/// and single-site jump channels. Immutable after validate(); all energies
/// and rates are in units of a base coupling J, times in 1/J.
struct SpinModel {
  int n_sites = 0;
  std::vector<Coupling> couplings;
  std::vector<Real> fields;  // one entry per site; empty means all zero
  std::vector<JumpChannel> jumps;

  /// Throws ConfigError on out-of-range sites, duplicate unordered pairs,
  /// self couplings, or negative rates.
  void validate() const;

  Real field(int site) const { return fields.empty() ? 0.0 : fields[static_cast<std::size_t>(site)]; }
  /// Channels attached to one site, in declaration order.
  std::vector<JumpChannel> jumps_at(int site) const;
  Real max_rate() const;
};

enum class JumpPresetKind {
  DephasingZ,    // sigma^z
  DephasingXY,   // cos(theta) sigma^x + sin(theta) sigma^y
  EmissionZ,     // sigma^-
  PumpZ,         // sigma^+
  EmissionXY,    // sigma^z + i (cos(theta) sigma^x + sin(theta) sigma^y)
  RotatedTfim,   // sigma^y - i sigma^z
};

/// The 2x2 jump matrix of a named preset; theta is used by the xy families.
Matrix2cd jump_preset(JumpPresetKind kind, Real theta = 0.0);
JumpPresetKind jump_preset_from_name(const std::string& name);
std::string jump_preset_name(JumpPresetKind kind);

/// Regular lattices with a finite interaction range in graph distance.
struct LatticeSpec {
  enum class Kind { Chain, Square };
  Kind kind = Kind::Chain;
  std::vector<int> extent;  // {N} for chain, {Lx, Ly} for square
  bool periodic = false;
  int range = 1;
  /// Total bond coefficient per graph distance 1..range.
  std::vector<Real> coupling_per_distance;

  int site_count() const;
  /// One Coupling per unordered pair within range.
  std::vector<Coupling> generate_couplings() const;
};

/// A product state given by one Bloch vector per site; |b| <= 1, pure iff = 1.
struct InitialProductState {
  std::vector<Eigen::Vector3d> bloch;

  static InitialProductState uniform(int n_sites, const Eigen::Vector3d& b);
  /// "+x", "-x", "+y", "-y", "+z", "-z"
  static Eigen::Vector3d named_axis(const std::string& name);

  int n_sites() const { return static_cast<int>(bloch.size()); }
  /// (1 + b . sigma)/2 for one site.
  Matrix2cd site_density(int site) const;
  /// Tensor product over a subset of sites (in the given order).
  MatrixXcd density_matrix(const std::vector<int>& sites) const;
  MatrixXcd density_matrix() const;
  bool is_pure(Real tol = 1e-12) const;
  void validate() const;
};

/// Diagonal of H in the computational z-basis (site 0 = most significant bit,
/// bit 0 means spin up, sigma^z = +1).
VectorXd hamiltonian_diagonal(const SpinModel& model);

/// Dense 2^n x 2^n Hamiltonian (diagonal by construction).
MatrixXcd hamiltonian_dense(const SpinModel& model);

/// L(rho) and the Heisenberg-picture generator L'(O) on operator vectors.
/// Throws DomainError if the operator's site count differs from the model's.
OperatorVector liouvillian_action(const SpinModel& model, const OperatorVector& rho);
OperatorVector adjoint_liouvillian_action(const SpinModel& model, const OperatorVector& obs);

}  // namespace solis
