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

#include <cstdint>
#include <string>
#include <vector>

#include "solis/types.hpp"

namespace solis {

/// Single-site Hermitian basis letters, in the fixed basis order (1, z, x, y).
/// The numeric values matter: flat indices group by this order, and the
/// xy-weight of a letter is simply `letter >= X`.
enum class PauliLetter : std::uint8_t { I = 0, Z = 1, X = 2, Y = 3 };

char to_char(PauliLetter p);
PauliLetter letter_from_char(char c);

/// A word over {I, Z, X, Y}: the tensor-product operator
/// sigma^{w0} (x) sigma^{w1} (x) ... on sites 0..n-1.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<PauliLetter> word) : word_(std::move(word)) {}

  static PauliString identity(int n_sites);
  /// Parse "IZXY"-style words (case-insensitive, '1' accepted for I).
  static PauliString from_string(const std::string& s);
  /// Inverse of flat_index for a given system size.
  static PauliString from_flat_index(std::uint64_t index, int n_sites);
  /// Single non-identity letter at `site` in an n-site system.
  static PauliString single_site(int n_sites, int site, PauliLetter p);

  int size() const { return static_cast<int>(word_.size()); }
  PauliLetter operator[](int site) const { return word_[static_cast<std::size_t>(site)]; }
  PauliLetter& operator[](int site) { return word_[static_cast<std::size_t>(site)]; }
  const std::vector<PauliLetter>& word() const { return word_; }

  /// Base-4 flat index with site 0 as the slowest (most significant) digit.
  std::uint64_t flat_index() const;
  /// Count of X/Y letters (the grade of the string).
  int xy_weight() const;
  std::string str() const;

  bool operator==(const PauliString& other) const = default;

 private:
  std::vector<PauliLetter> word_;
};

struct PauliProduct {
  Complex phase;  // one of {1, i, -1, -i}
  PauliString string;
};

/// a * b as a phase times a Pauli string. Throws on length mismatch.
PauliProduct multiply_paulis(const PauliString& a, const PauliString& b);

/// xy-weight of a flat index (no PauliString materialisation).
int xy_weight_of_index(std::uint64_t index, int n_sites);

/// Dense 2x2 matrix of a single letter.
Matrix2cd pauli_matrix(PauliLetter p);

/// A Pauli string is a monomial matrix: column c has its unique nonzero at
/// row c ^ flip_mask with value i^i_power * (-1)^popcount(c & z_mask).
/// Bit n-1-j of an index holds site j, matching the kron order of sites.
struct PauliMonomial {
  std::uint64_t flip_mask = 0;
  std::uint64_t z_mask = 0;
  int i_power = 0;

  explicit PauliMonomial(const PauliString& s);
  Complex amplitude(std::uint64_t column) const;
  std::uint64_t row(std::uint64_t column) const { return column ^ flip_mask; }
};

/// Dense 2^n x 2^n matrix of a Pauli string.
MatrixXcd pauli_string_matrix(const PauliString& s);

/// Tr(P * M) in O(2^n) using the monomial structure of P.
Complex trace_pauli_times(const PauliString& p, const MatrixXcd& m);

/// An operator expanded over the Pauli-string basis: A = sum_mu c_mu mu.
/// Coefficients are indexed by PauliString::flat_index. Hermitian operators
/// have all-real coefficients. Immutable by convention once built.
struct OperatorVector {
  int n_sites = 0;
  VectorXcd coeffs;

  static OperatorVector zero(int n_sites);
  static OperatorVector basis_state(const PauliString& s, Complex amplitude = 1.0);
};

/// <<A|B>> = 2^{-n} Tr(A^dag B) = sum_mu conj(A_mu) B_mu.
Complex inner_product(const OperatorVector& a, const OperatorVector& b);

/// Reassemble the dense 2^n x 2^n matrix from its coefficients.
MatrixXcd synthesize(const OperatorVector& op);

/// Expand a dense 2^n x 2^n matrix: c_mu = 2^{-n} Tr(mu * A).
OperatorVector expand(const MatrixXcd& a);

std::uint64_t pow4(int n);

}  // namespace solis
