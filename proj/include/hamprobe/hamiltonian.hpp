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
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "hamprobe/pauli.hpp"

namespace hamprobe {

/// H = sum_x lambda_x sigma_x with real coefficients, stored sparsely.
/// Zero coefficients are never stored; iteration is in canonical key order.
class Hamiltonian {
 public:
  explicit Hamiltonian(int n = 0) : n_(n) {}

  int num_qubits() const { return n_; }
  const std::map<PauliString, double>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  double coefficient(const PauliString& x) const;
  /// Adds to the coefficient of x, dropping the term if it cancels.
  void add_term(const PauliString& x, double lambda);
  /// Replaces the coefficient of x. Zero removes it.
  void set_term(const PauliString& x, double lambda);

  /// Normalised Frobenius norm ||H||_2 = sqrt(sum_x lambda_x^2).
  double norm2() const;
  bool is_traceless() const { return coefficient(PauliString(n_)) == 0.0; }
  Hamiltonian scaled(double factor) const;

  /// sum_x (a_x - b_x) sigma_x.
  friend Hamiltonian operator-(const Hamiltonian& a, const Hamiltonian& b);

 private:
  int n_;
  std::map<PauliString, double> terms_;
};

/// Pauli coefficients lambda_x = Tr(H sigma_x)/2^n of a dense Hermitian matrix.
/// Coefficients with |lambda| <= drop_tol are omitted.
Hamiltonian pauli_decompose(const Eigen::MatrixXcd& m, double drop_tol = 1e-13);

/// Dense matrix sum_x lambda_x sigma_x.
Eigen::MatrixXcd synthesize(const Hamiltonian& h);

/// ||H_{>k}||_2: norm of the part acting on more than k qubits.
double distance_to_local(const Hamiltonian& h, int k);

/// 2-norm of everything outside the s largest-magnitude coefficients.
double distance_to_sparse(const Hamiltonian& h, int64_t s);

/// Norm of the part outside an explicit support set.
double distance_to_support(const Hamiltonian& h, const std::vector<PauliString>& support);

/// Spectral norm via Hermitian eigendecomposition.
double operator_norm(const Hamiltonian& h);

/// Coefficients sorted by decreasing magnitude, ties broken by key order.
std::vector<std::pair<PauliString, double>> ranked_terms(const Hamiltonian& h);

struct StructureDistanceReport {
  int k = 0;
  int64_t s = 0;
  double norm2 = 0.0;
  double distance_to_k_local = 0.0;
  double distance_to_s_sparse = 0.0;
  std::vector<double> sorted_magnitudes;
};

StructureDistanceReport structure_report(const Hamiltonian& h, int k, int64_t s);

/// Text format: one "LABEL coefficient" per line, '#' starts a comment.
/// Rejects non-finite values, duplicate labels and mixed qubit counts.
Hamiltonian parse_hamiltonian_text(std::istream& in);
Hamiltonian load_hamiltonian(const std::string& path);
std::string format_hamiltonian_text(const Hamiltonian& h);
void save_hamiltonian(const Hamiltonian& h, const std::string& path);

}  // namespace hamprobe
