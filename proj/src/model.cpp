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

#include "solis/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "solis/liouville.hpp"

namespace solis {

void SpinModel::validate() const {
  if (n_sites <= 0) throw ConfigError("model: n_sites must be positive");
  std::set<std::pair<int, int>> seen;
  for (const auto& c : couplings) {
    if (c.j == c.k) throw ConfigError("model: self coupling on site " + std::to_string(c.j));
    if (c.j < 0 || c.j >= n_sites || c.k < 0 || c.k >= n_sites)
      throw ConfigError("model: coupling site index out of range");
    auto key = std::minmax(c.j, c.k);
    if (!seen.insert(key).second)
      throw ConfigError("model: duplicate coupling for pair (" + std::to_string(key.first) +
                        "," + std::to_string(key.second) + ")");
  }
  if (!fields.empty() && static_cast<int>(fields.size()) != n_sites)
    throw ConfigError("model: fields must have one entry per site");
  for (const auto& jump : jumps) {
    if (jump.site < 0 || jump.site >= n_sites)
      throw ConfigError("model: jump site index out of range");
    if (jump.rate < 0)
      throw ConfigError("model: negative rate on site " + std::to_string(jump.site));
  }
}

std::vector<JumpChannel> SpinModel::jumps_at(int site) const {
  std::vector<JumpChannel> out;
  for (const auto& jump : jumps)
    if (jump.site == site) out.push_back(jump);
  return out;
}

Real SpinModel::max_rate() const {
  Real r = 0;
  for (const auto& jump : jumps) r = std::max(r, jump.rate);
  return r;
}

Matrix2cd jump_preset(JumpPresetKind kind, Real theta) {
  const Matrix2cd x = pauli_matrix(PauliLetter::X);
  const Matrix2cd y = pauli_matrix(PauliLetter::Y);
  const Matrix2cd z = pauli_matrix(PauliLetter::Z);
  switch (kind) {
    case JumpPresetKind::DephasingZ: return z;
    case JumpPresetKind::DephasingXY: return std::cos(theta) * x + std::sin(theta) * y;
    case JumpPresetKind::EmissionZ: return 0.5 * (x - kImag * y);  // sigma^-
    case JumpPresetKind::PumpZ: return 0.5 * (x + kImag * y);      // sigma^+
    case JumpPresetKind::EmissionXY:
      return z + kImag * (std::cos(theta) * x + std::sin(theta) * y);
    case JumpPresetKind::RotatedTfim: return y - kImag * z;
  }
  throw ConfigError("unknown jump preset");
}

JumpPresetKind jump_preset_from_name(const std::string& name) {
  if (name == "dephasing_z") return JumpPresetKind::DephasingZ;
  if (name == "dephasing_xy") return JumpPresetKind::DephasingXY;
  if (name == "emission_z") return JumpPresetKind::EmissionZ;
  if (name == "pump_z") return JumpPresetKind::PumpZ;
  if (name == "emission_xy") return JumpPresetKind::EmissionXY;
  if (name == "rotated_tfim") return JumpPresetKind::RotatedTfim;
  throw ConfigError("unknown jump preset: " + name);
}

std::string jump_preset_name(JumpPresetKind kind) {
  switch (kind) {
    case JumpPresetKind::DephasingZ: return "dephasing_z";
    case JumpPresetKind::DephasingXY: return "dephasing_xy";
    case JumpPresetKind::EmissionZ: return "emission_z";
    case JumpPresetKind::PumpZ: return "pump_z";
    case JumpPresetKind::EmissionXY: return "emission_xy";
    case JumpPresetKind::RotatedTfim: return "rotated_tfim";
  }
  return "?";
}

int LatticeSpec::site_count() const {
  int n = 1;
  for (int e : extent) n *= e;
  return n;
}

namespace {

int chain_distance(int j, int k, int n, bool periodic) {
  int d = std::abs(j - k);
  if (periodic) d = std::min(d, n - d);
  return d;
}

int axis_distance(int a, int b, int len, bool periodic) {
  int d = std::abs(a - b);
  if (periodic) d = std::min(d, len - d);
  return d;
}

}  // namespace

std::vector<Coupling> LatticeSpec::generate_couplings() const {
  if (range < 1) throw ConfigError("lattice: range must be >= 1");
  if (static_cast<int>(coupling_per_distance.size()) != range)
    throw ConfigError("lattice: need one coupling value per distance 1..range");
  const int n = site_count();
  std::vector<Coupling> out;
  if (kind == Kind::Chain) {
    if (extent.size() != 1) throw ConfigError("lattice: chain needs extent = [N]");
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int d = chain_distance(j, k, n, periodic);
        if (d >= 1 && d <= range && coupling_per_distance[static_cast<std::size_t>(d - 1)] != 0.0)
          out.push_back({j, k, coupling_per_distance[static_cast<std::size_t>(d - 1)]});
      }
  } else {
    if (extent.size() != 2) throw ConfigError("lattice: square needs extent = [Lx, Ly]");
    const int lx = extent[0], ly = extent[1];
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int d = axis_distance(j / ly, k / ly, lx, periodic) +
                      axis_distance(j % ly, k % ly, ly, periodic);
        if (d >= 1 && d <= range && coupling_per_distance[static_cast<std::size_t>(d - 1)] != 0.0)
          out.push_back({j, k, coupling_per_distance[static_cast<std::size_t>(d - 1)]});
      }
  }
  return out;
}

InitialProductState InitialProductState::uniform(int n_sites, const Eigen::Vector3d& b) {
  InitialProductState s;
  s.bloch.assign(static_cast<std::size_t>(n_sites), b);
  return s;
}

Eigen::Vector3d InitialProductState::named_axis(const std::string& name) {
  if (name.size() != 2 || (name[0] != '+' && name[0] != '-'))
    throw ConfigError("initial state: expected one of +x,-x,+y,-y,+z,-z, got '" + name + "'");
  const Real sign = name[0] == '+' ? 1.0 : -1.0;
  switch (name[1]) {
    case 'x': return {sign, 0, 0};
    case 'y': return {0, sign, 0};
    case 'z': return {0, 0, sign};
    default: throw ConfigError("initial state: unknown axis '" + name + "'");
  }
}

Matrix2cd InitialProductState::site_density(int site) const {
  const auto& b = bloch[static_cast<std::size_t>(site)];
  Matrix2cd rho = 0.5 * Matrix2cd::Identity();
  rho += 0.5 * (b.x() * pauli_matrix(PauliLetter::X) + b.y() * pauli_matrix(PauliLetter::Y) +
                b.z() * pauli_matrix(PauliLetter::Z));
  return rho;
}

MatrixXcd InitialProductState::density_matrix(const std::vector<int>& sites) const {
  MatrixXcd rho = MatrixXcd::Identity(1, 1);
  for (int s : sites) {
    const Matrix2cd site_rho = site_density(s);
    MatrixXcd next(rho.rows() * 2, rho.cols() * 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        next.block(a * rho.rows(), b * rho.cols(), rho.rows(), rho.cols()) = site_rho(a, b) * rho;
    rho.swap(next);
  }
  return rho;
}

MatrixXcd InitialProductState::density_matrix() const {
  std::vector<int> all(static_cast<std::size_t>(n_sites()));
  for (int j = 0; j < n_sites(); ++j) all[static_cast<std::size_t>(j)] = j;
  return density_matrix(all);
}

bool InitialProductState::is_pure(Real tol) const {
  for (const auto& b : bloch)
    if (std::abs(b.norm() - 1.0) > tol) return false;
  return true;
}

void InitialProductState::validate() const {
  for (std::size_t j = 0; j < bloch.size(); ++j)
    if (bloch[j].norm() > 1.0 + 1e-12)
      throw ConfigError("initial state: Bloch vector on site " + std::to_string(j) +
                        " has norm > 1");
}

VectorXd hamiltonian_diagonal(const SpinModel& model) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << model.n_sites);
  VectorXd energies = VectorXd::Zero(dim);
  auto zval = [&](std::uint64_t s, int site) -> Real {
    return (s >> (model.n_sites - 1 - site)) & 1u ? -1.0 : 1.0;
  };
  for (Eigen::Index s = 0; s < dim; ++s) {
    const auto bits = static_cast<std::uint64_t>(s);
    Real e = 0;
    for (const auto& c : model.couplings) e += c.strength * zval(bits, c.j) * zval(bits, c.k);
    for (int j = 0; j < model.n_sites; ++j) e += model.field(j) * zval(bits, j);
    energies(s) = e;
  }
  return energies;
}

MatrixXcd hamiltonian_dense(const SpinModel& model) {
  return hamiltonian_diagonal(model).cast<Complex>().asDiagonal();
}

OperatorVector liouvillian_action(const SpinModel& model, const OperatorVector& rho) {
  if (rho.n_sites != model.n_sites)
    throw DomainError("liouvillian_action: operator support does not match model");
  return OperatorVector{rho.n_sites,
                        apply_liouvillian<Complex>(model, rho.coeffs, Picture::Schrodinger)};
}

OperatorVector adjoint_liouvillian_action(const SpinModel& model, const OperatorVector& obs) {
  if (obs.n_sites != model.n_sites)
    throw DomainError("adjoint_liouvillian_action: operator support does not match model");
  return OperatorVector{obs.n_sites,
                        apply_liouvillian<Complex>(model, obs.coeffs, Picture::Adjoint)};
}

}  // namespace solis
