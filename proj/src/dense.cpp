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

#include "hamprobe/dense.hpp"

#include <bit>

#include "hamprobe/error.hpp"
#include "hamprobe/walsh.hpp"

namespace hamprobe {

uint64_t reverse_bits(uint64_t v, int n) {
  uint64_t r = 0;
  for (int i = 0; i < n; ++i) r |= ((v >> i) & 1) << (n - 1 - i);
  return r;
}

cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

namespace {

struct IndexMasks {
  uint64_t a, b;
  cplx phase;
};

IndexMasks masks(const PauliString& x) {
  int n = x.num_qubits();
  return {reverse_bits(x.x_bits(), n), reverse_bits(x.z_bits(), n),
          i_pow(std::popcount(x.x_bits() & x.z_bits()))};
}

}  // namespace

Eigen::MatrixXcd pauli_matrix(const PauliString& x) {
  int n = x.num_qubits();
  require_dense(n, "pauli_matrix");
  const uint64_t dim = uint64_t{1} << n;
  auto [a, b, ph] = masks(x);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (uint64_t v = 0; v < dim; ++v) {
    double s = (std::popcount(b & v) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(v ^ a), static_cast<Eigen::Index>(v)) = ph * s;
  }
  return m;
}

Eigen::VectorXcd apply_pauli(const PauliString& x, const Eigen::VectorXcd& psi) {
  int n = x.num_qubits();
  const uint64_t dim = uint64_t{1} << n;
  if (static_cast<uint64_t>(psi.size()) != dim) throw DimensionError("apply_pauli: state length");
  auto [a, b, ph] = masks(x);
  Eigen::VectorXcd out(psi.size());
  for (uint64_t v = 0; v < dim; ++v) {
    double s = (std::popcount(b & v) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(v ^ a)) = ph * s * psi(static_cast<Eigen::Index>(v));
  }
  return out;
}

Eigen::MatrixXcd left_multiply_pauli(const PauliString& x, const Eigen::MatrixXcd& m) {
  int n = x.num_qubits();
  const uint64_t dim = uint64_t{1} << n;
  if (static_cast<uint64_t>(m.rows()) != dim) throw DimensionError("left_multiply_pauli: shape");
  auto [a, b, ph] = masks(x);
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (uint64_t v = 0; v < dim; ++v) {
    double s = (std::popcount(b & v) & 1) ? -1.0 : 1.0;
    out.row(static_cast<Eigen::Index>(v ^ a)) = (ph * s) * m.row(static_cast<Eigen::Index>(v));
  }
  return out;
}

std::vector<cplx> pauli_coefficients(const Eigen::MatrixXcd& m, int n) {
  require_dense(n, "pauli_coefficients");
  const uint64_t dim = uint64_t{1} << n;
  if (static_cast<uint64_t>(m.rows()) != dim || static_cast<uint64_t>(m.cols()) != dim) {
    throw DimensionError("pauli_coefficients: matrix must be 2^n x 2^n");
  }
  std::vector<cplx> out(dim * dim);
  std::vector<cplx> g(dim);
  const double inv = 1.0 / static_cast<double>(dim);
  // Tr(sigma_x M) = i^{a.b} sum_w (-1)^{B.w} M(w, w^A) with index-space masks A, B.
  for (uint64_t A = 0; A < dim; ++A) {
    for (uint64_t w = 0; w < dim; ++w) g[w] = m(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(w ^ A));
    walsh_hadamard(std::span<cplx>(g));
    uint64_t xa = reverse_bits(A, n);
    for (uint64_t B = 0; B < dim; ++B) {
      uint64_t zb = reverse_bits(B, n);
      cplx ph = i_pow(std::popcount(xa & zb));
      out[xa | (zb << n)] = ph * g[B] * inv;
    }
  }
  return out;
}

}  // namespace hamprobe
