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

#include "hamprobe/mub.hpp"

#include <bit>
#include <cmath>

#include "hamprobe/dense.hpp"
#include "hamprobe/error.hpp"

namespace hamprobe {

namespace {

constexpr uint64_t kPolys[] = {0,     0x3,   0x7,   0xB,   0x13,  0x25,  0x43,
                               0x83,  0x11D, 0x211, 0x409, 0x805, 0x1053};

uint64_t gf_mul(uint64_t a, uint64_t b, int n, uint64_t poly) {
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> n) & 1) a ^= poly;
  }
  return r;
}

int gf_trace(uint64_t u, int n, uint64_t poly) {
  uint64_t acc = 0, p = u;
  for (int m = 0; m < n; ++m) {
    acc ^= p;
    p = gf_mul(p, p, n, poly);
  }
  return static_cast<int>(acc & 1);  // the trace lies in GF(2)
}

}  // namespace

uint64_t field_polynomial(int n) {
  if (n < 1 || n > 12) throw CapacityError("MUB construction supports 1 <= n <= 12");
  return kPolys[n];
}

std::vector<uint64_t> mub_symmetric_matrix(int n, uint64_t a) {
  uint64_t poly = field_polynomial(n);
  // column k of L_a is a * x^k; Q_kl = Tr(x^k x^l); M = Q L_a, so M_kl = Tr(x^k * a * x^l).
  std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      uint64_t prod = gf_mul(gf_mul(uint64_t{1} << k, a, n, poly), uint64_t{1} << l, n, poly);
      rows[k] |= static_cast<uint64_t>(gf_trace(prod, n, poly)) << l;
    }
  }
  return rows;
}

MubFamily::MubFamily(int n) : n_(n) {
  field_polynomial(n);
  const uint64_t N = dimension();
  gens_.resize(N + 1);
  for (int k = 0; k < n; ++k) gens_[0].emplace_back(n, 0, uint64_t{1} << k);
  for (uint64_t a = 0; a < N; ++a) {
    auto m = mub_symmetric_matrix(n, a);
    for (int k = 0; k < n; ++k) {
      // M is symmetric, so column k equals row k
      gens_[a + 1].emplace_back(n, uint64_t{1} << k, m[k]);
    }
  }
}

PauliString MubFamily::element(uint64_t i, uint64_t c) const {
  PauliString r(n_);
  for (int k = 0; k < n_; ++k) {
    if ((c >> k) & 1) r ^= gens_.at(i)[k];
  }
  return r;
}

std::vector<PauliString> MubFamily::subspace(uint64_t i) const {
  std::vector<PauliString> out;
  for (uint64_t c = 0; c < dimension(); ++c) out.push_back(element(i, c));
  return out;
}

int MubFamily::sign(uint64_t i, uint64_t c) const {
  PauliString acc(n_);
  int phase = 0;
  for (int k = 0; k < n_; ++k) {
    if (!((c >> k) & 1)) continue;
    PhasedPauli p = pauli_product(acc, gens_.at(i)[k]);
    phase += p.phase_exp;
    acc = p.pauli;
  }
  return (phase % 4) == 0 ? 1 : -1;
}

uint64_t MubFamily::syndrome(uint64_t i, const PauliString& x) const {
  uint64_t s = 0;
  for (int k = 0; k < n_; ++k) s |= static_cast<uint64_t>(symplectic_inner(x, gens_.at(i)[k])) << k;
  return s;
}

PauliString MubFamily::coset_representative(uint64_t i, uint64_t j) const {
  if (i == 0) return PauliString(n_, j, 0);
  return PauliString(n_, 0, j);
}

Eigen::MatrixXcd MubFamily::projector(uint64_t i, uint64_t j) const {
  require_dense(n_, "MubFamily::projector");
  const uint64_t N = dimension();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (uint64_t c = 0; c < N; ++c) {
    double s = sign(i, c) * ((std::popcount(c & j) & 1) ? -1.0 : 1.0);
    p += s * pauli_matrix(element(i, c));
  }
  return p / static_cast<double>(N);
}

Eigen::MatrixXcd MubFamily::basis_matrix(uint64_t i) const {
  require_dense(n_, "MubFamily::basis_matrix");
  const uint64_t N = dimension();
  const auto Ni = static_cast<Eigen::Index>(N);
  // Pi_{i,0} applied to a computational basis vector; pick the column of largest norm.
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(Ni, Ni);
  for (uint64_t c = 0; c < N; ++c) {
    proj += static_cast<double>(sign(i, c)) * pauli_matrix(element(i, c));
  }
  Eigen::Index best = 0;
  proj.colwise().norm().maxCoeff(&best);
  Eigen::VectorXcd phi0 = proj.col(best).normalized();
  Eigen::MatrixXcd out(Ni, Ni);
  for (uint64_t j = 0; j < N; ++j) out.col(static_cast<Eigen::Index>(j)) = apply_pauli(coset_representative(i, j), phi0);
  return out;
}

}  // namespace hamprobe
