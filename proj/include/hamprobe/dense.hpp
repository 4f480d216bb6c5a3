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
#include <complex>
#include <vector>

#include "hamprobe/pauli.hpp"

namespace hamprobe {

using cplx = std::complex<double>;

/// Dense matrix of sigma_x. Qubit 0 is the leftmost tensor factor, so the
/// matrix row/column index carries qubit q in bit n-1-q.
Eigen::MatrixXcd pauli_matrix(const PauliString& x);

/// sigma_x |psi>.
Eigen::VectorXcd apply_pauli(const PauliString& x, const Eigen::VectorXcd& psi);

/// sigma_x M (left multiplication, row permutation with phases).
Eigen::MatrixXcd left_multiply_pauli(const PauliString& x, const Eigen::MatrixXcd& m);

/// Tr(sigma_x M) / 2^n for every x, indexed by PauliString::index().
/// Cost O(n 4^n).
std::vector<cplx> pauli_coefficients(const Eigen::MatrixXcd& m, int n);

/// Reverses the low n bits (qubit mask <-> matrix-index mask).
uint64_t reverse_bits(uint64_t v, int n);

/// i^k for k mod 4.
cplx i_pow(int k);

}  // namespace hamprobe
