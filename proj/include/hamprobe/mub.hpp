// Copyright 2026 The hamprobe Authors
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

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hamprobe/pauli.hpp"

namespace hamprobe {

/// A complete family of N+1 mutually unbiased bases on n qubits (N = 2^n),
/// built from N+1 Lagrangian subspaces G_0..G_N of F_2^{2n} that meet pairwise
/// only at zero.
///
/// G_0 = {(0, b)} is the computational (Z) basis. For a in GF(2^n),
/// G_{1+a} = {(v, M_a v)} where M_a = Q L_a, L_a is multiplication by a in the
/// polynomial basis and Q is the Gram matrix of the field trace form.
///
/// Within basis i, state j (j in F_2^n, stored as an integer) has projector
///   |phi_ij><phi_ij| = (1/N) sum_{y in G_i} (-1)^{[r_j, y]} s_i(y) sigma_y,
/// where r_j is the coset representative with syndrome j and s_i(y) = +-1 is the
/// sign that makes {s_i(y) sigma_y} a group. Conjugating by sigma_x maps state j
/// to state shift_index(i, j, x) = j XOR syndrome(i, x).
class MubFamily {
 public:
  explicit MubFamily(int n);

  int num_qubits() const { return n_; }
  uint64_t dimension() const { return uint64_t{1} << n_; }
  uint64_t num_bases() const { return dimension() + 1; }

  /// Generators h_{i,0..n-1} of G_i.
  const std::vector<PauliString>& generators(uint64_t i) const { return gens_.at(i); }
  /// Element sum_k c_k h_{i,k}.
  PauliString element(uint64_t i, uint64_t c) const;
  std::vector<PauliString> subspace(uint64_t i) const;
  /// Sign s_i of the element with coordinates c.
  int sign(uint64_t i, uint64_t c) const;

  /// Bit k is [x, h_{i,k}]; zero iff x is in G_i.
  uint64_t syndrome(uint64_t i, const PauliString& x) const;
  uint64_t shift_index(uint64_t i, uint64_t j, const PauliString& x) const {
    return j ^ syndrome(i, x);
  }
  /// A string with syndrome j in basis i.
  PauliString coset_representative(uint64_t i, uint64_t j) const;

  /// Columns are |phi_{i,0}>, ..., |phi_{i,N-1}>. Dense, cost O(N^2).
  Eigen::MatrixXcd basis_matrix(uint64_t i) const;
  /// Dense projector built from the Pauli expansion above.
  Eigen::MatrixXcd projector(uint64_t i, uint64_t j) const;

 private:
  int n_;
  std::vector<std::vector<PauliString>> gens_;
};

/// Symmetric matrix M_a (rows as bit masks) for field element a. Exposed for tests.
std::vector<uint64_t> mub_symmetric_matrix(int n, uint64_t a);

/// Irreducible polynomial used for GF(2^n), bit k = coefficient of x^k.
uint64_t field_polynomial(int n);

}  // namespace hamprobe
