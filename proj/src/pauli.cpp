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

#include "solis/pauli.hpp"

#include <bit>
#include <cctype>

namespace solis {

namespace {

// prod[a][b]: the letter of a*b; phase_pow[a][b]: the power k in a*b = i^k (a*b).
constexpr std::uint8_t kProd[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr std::uint8_t kPhasePow[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},  // z*x = i y, z*y = -i x
    {0, 3, 0, 1},  // x*z = -i y, x*y = i z
    {0, 1, 3, 0},  // y*z = i x, y*x = -i z
};

constexpr Complex kPhaseTable[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

char to_char(PauliLetter p) {
  switch (p) {
    case PauliLetter::I: return 'I';
    case PauliLetter::Z: return 'Z';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
  }
  return '?';
}

PauliLetter letter_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I':
    case '1': return PauliLetter::I;
    case 'Z': return PauliLetter::Z;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    default: throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
  }
}

PauliString PauliString::identity(int n_sites) {
  return PauliString(std::vector<PauliLetter>(static_cast<std::size_t>(n_sites), PauliLetter::I));
}

PauliString PauliString::from_string(const std::string& s) {
  std::vector<PauliLetter> word;
  word.reserve(s.size());
  for (char c : s) word.push_back(letter_from_char(c));
  return PauliString(std::move(word));
}

PauliString PauliString::from_flat_index(std::uint64_t index, int n_sites) {
  std::vector<PauliLetter> word(static_cast<std::size_t>(n_sites));
  for (int j = n_sites - 1; j >= 0; --j) {
    word[static_cast<std::size_t>(j)] = static_cast<PauliLetter>(index & 3u);
    index >>= 2;
  }
  return PauliString(std::move(word));
}

PauliString PauliString::single_site(int n_sites, int site, PauliLetter p) {
  PauliString s = identity(n_sites);
  s[site] = p;
  return s;
}

std::uint64_t PauliString::flat_index() const {
  std::uint64_t idx = 0;
  for (PauliLetter p : word_) idx = (idx << 2) | static_cast<std::uint64_t>(p);
  return idx;
}

int PauliString::xy_weight() const {
  int d = 0;
  for (PauliLetter p : word_) d += (p >= PauliLetter::X);
  return d;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(word_.size());
  for (PauliLetter p : word_) s.push_back(to_char(p));
  return s;
}

PauliProduct multiply_paulis(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("multiply_paulis: length mismatch");
  std::vector<PauliLetter> word(static_cast<std::size_t>(a.size()));
  int phase_pow = 0;
  for (int j = 0; j < a.size(); ++j) {
    const auto la = static_cast<std::uint8_t>(a[j]);
    const auto lb = static_cast<std::uint8_t>(b[j]);
    word[static_cast<std::size_t>(j)] = static_cast<PauliLetter>(kProd[la][lb]);
    phase_pow += kPhasePow[la][lb];
  }
  return PauliProduct{kPhaseTable[phase_pow & 3], PauliString(std::move(word))};
}

int xy_weight_of_index(std::uint64_t index, int n_sites) {
  int d = 0;
  for (int j = 0; j < n_sites; ++j) {
    d += ((index & 3u) >= 2u);
    index >>= 2;
  }
  return d;
}

Matrix2cd pauli_matrix(PauliLetter p) {
  Matrix2cd m = Matrix2cd::Zero();
  switch (p) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
  }
  return m;
}

PauliMonomial::PauliMonomial(const PauliString& s) {
  const int n = s.size();
  for (int j = 0; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
    switch (s[j]) {
      case PauliLetter::I: break;
      case PauliLetter::Z: z_mask |= bit; break;
      case PauliLetter::X: flip_mask |= bit; break;
      case PauliLetter::Y:
        flip_mask |= bit;
        z_mask |= bit;
        ++i_power;
        break;
    }
  }
  i_power &= 3;
}

Complex PauliMonomial::amplitude(std::uint64_t column) const {
  const int sign = (std::popcount(column & z_mask) & 1) ? -1 : 1;
  return kPhaseTable[i_power] * static_cast<Real>(sign);
}

MatrixXcd pauli_string_matrix(const PauliString& s) {
  const std::uint64_t dim = std::uint64_t{1} << s.size();
  const PauliMonomial mono(s);
  MatrixXcd m = MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t c = 0; c < dim; ++c)
    m(static_cast<Eigen::Index>(mono.row(c)), static_cast<Eigen::Index>(c)) = mono.amplitude(c);
  return m;
}

Complex trace_pauli_times(const PauliString& p, const MatrixXcd& m) {
  const std::uint64_t dim = std::uint64_t{1} << p.size();
  if (m.rows() != static_cast<Eigen::Index>(dim) || m.cols() != static_cast<Eigen::Index>(dim))
    throw std::invalid_argument("trace_pauli_times: dimension mismatch");
  const PauliMonomial mono(p);
  Complex tr = 0;
  for (std::uint64_t c = 0; c < dim; ++c)
    tr += mono.amplitude(c) * m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(mono.row(c)));
  return tr;
}

OperatorVector OperatorVector::zero(int n_sites) {
  return OperatorVector{n_sites, VectorXcd::Zero(static_cast<Eigen::Index>(pow4(n_sites)))};
}

OperatorVector OperatorVector::basis_state(const PauliString& s, Complex amplitude) {
  OperatorVector v = zero(s.size());
  v.coeffs(static_cast<Eigen::Index>(s.flat_index())) = amplitude;
  return v;
}

Complex inner_product(const OperatorVector& a, const OperatorVector& b) {
  if (a.n_sites != b.n_sites)
    throw std::invalid_argument("inner_product: dimension mismatch");
  return a.coeffs.dot(b.coeffs);  // Eigen's dot conjugates the left argument
}

MatrixXcd synthesize(const OperatorVector& op) {
  const int n = op.n_sites;
  const std::uint64_t dim = std::uint64_t{1} << n;
  MatrixXcd m = MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const std::uint64_t n_basis = pow4(n);
  for (std::uint64_t mu = 0; mu < n_basis; ++mu) {
    const Complex c = op.coeffs(static_cast<Eigen::Index>(mu));
    if (c == Complex(0, 0)) continue;
    const PauliMonomial mono(PauliString::from_flat_index(mu, n));
    for (std::uint64_t col = 0; col < dim; ++col)
      m(static_cast<Eigen::Index>(mono.row(col)), static_cast<Eigen::Index>(col)) +=
          c * mono.amplitude(col);
  }
  return m;
}

OperatorVector expand(const MatrixXcd& a) {
  const std::uint64_t dim = static_cast<std::uint64_t>(a.rows());
  if (a.cols() != a.rows() || dim == 0 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("expand: matrix must be square with power-of-two size");
  const int n = std::countr_zero(dim);
  OperatorVector op = OperatorVector::zero(n);
  const Real scale = 1.0 / static_cast<Real>(dim);
  const std::uint64_t n_basis = pow4(n);
  for (std::uint64_t mu = 0; mu < n_basis; ++mu) {
    const PauliMonomial mono(PauliString::from_flat_index(mu, n));
    Complex tr = 0;
    for (std::uint64_t c = 0; c < dim; ++c)
      tr += mono.amplitude(c) *
            a(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(mono.row(c)));
    op.coeffs(static_cast<Eigen::Index>(mu)) = tr * scale;
  }
  return op;
}

std::uint64_t pow4(int n) { return std::uint64_t{1} << (2 * n); }

}  // namespace solis
