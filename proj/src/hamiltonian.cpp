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

#include "hamprobe/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hamprobe/dense.hpp"
#include "hamprobe/error.hpp"

namespace hamprobe {

double Hamiltonian::coefficient(const PauliString& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? 0.0 : it->second;
}

void Hamiltonian::add_term(const PauliString& x, double lambda) {
  set_term(x, coefficient(x) + lambda);
}

void Hamiltonian::set_term(const PauliString& x, double lambda) {
  if (x.num_qubits() != n_) throw DimensionError("Hamiltonian term on wrong qubit count");
  if (!std::isfinite(lambda)) throw ValidationError("non-finite coefficient for " + x.label());
  if (lambda == 0.0) {
    terms_.erase(x);
  } else {
    terms_[x] = lambda;
  }
}

double Hamiltonian::norm2() const {
  double s = 0.0;
  for (const auto& [x, v] : terms_) s += v * v;
  return std::sqrt(s);
}

Hamiltonian Hamiltonian::scaled(double factor) const {
  Hamiltonian out(n_);
  for (const auto& [x, v] : terms_) out.set_term(x, v * factor);
  return out;
}

Hamiltonian operator-(const Hamiltonian& a, const Hamiltonian& b) {
  if (a.n_ != b.n_) throw DimensionError("Hamiltonian difference: qubit counts differ");
  Hamiltonian out = a;
  for (const auto& [x, v] : b.terms_) out.add_term(x, -v);
  return out;
}

Hamiltonian pauli_decompose(const Eigen::MatrixXcd& m, double drop_tol) {
  const auto dim = static_cast<uint64_t>(m.rows());
  if (!std::has_single_bit(dim) || m.cols() != m.rows()) throw DimensionError("pauli_decompose: not 2^n x 2^n");
  int n = std::countr_zero(dim);
  require_dense(n, "pauli_decompose");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw ValidationError("pauli_decompose: matrix is not Hermitian");
  }
  auto coeffs = pauli_coefficients(m, n);
  Hamiltonian h(n);
  for (uint64_t idx = 0; idx < coeffs.size(); ++idx) {
    double v = coeffs[idx].real();
    if (std::abs(v) > drop_tol) h.set_term(PauliString::from_index(n, idx), v);
  }
  return h;
}

Eigen::MatrixXcd synthesize(const Hamiltonian& h) {
  int n = h.num_qubits();
  require_dense(n, "synthesize");
  const uint64_t dim = uint64_t{1} << n;
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [x, lambda] : h.terms()) {
    uint64_t a = reverse_bits(x.x_bits(), n), b = reverse_bits(x.z_bits(), n);
    cplx ph = lambda * i_pow(std::popcount(x.x_bits() & x.z_bits()));
    for (uint64_t v = 0; v < dim; ++v) {
      double s = (std::popcount(b & v) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(v ^ a), static_cast<Eigen::Index>(v)) += s * ph;
    }
  }
  return m;
}

double distance_to_local(const Hamiltonian& h, int k) {
  double s = 0.0;
  for (const auto& [x, v] : h.terms()) {
    if (x.weight() > k) s += v * v;
  }
  return std::sqrt(s);
}

std::vector<std::pair<PauliString, double>> ranked_terms(const Hamiltonian& h) {
  std::vector<std::pair<PauliString, double>> out(h.terms().begin(), h.terms().end());
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return std::abs(l.second) > std::abs(r.second);
  });
  return out;
}

double distance_to_sparse(const Hamiltonian& h, int64_t s) {
  if (s < 0) throw ParameterError("sparsity must be non-negative");
  auto ranked = ranked_terms(h);
  double tail = 0.0;
  for (size_t i = static_cast<size_t>(s); i < ranked.size(); ++i) tail += ranked[i].second * ranked[i].second;
  return std::sqrt(tail);
}

double distance_to_support(const Hamiltonian& h, const std::vector<PauliString>& support) {
  std::unordered_set<PauliString> in(support.begin(), support.end());
  double s = 0.0;
  for (const auto& [x, v] : h.terms()) {
    if (!in.count(x)) s += v * v;
  }
  return std::sqrt(s);
}

double operator_norm(const Hamiltonian& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(synthesize(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

StructureDistanceReport structure_report(const Hamiltonian& h, int k, int64_t s) {
  StructureDistanceReport r;
  r.k = k;
  r.s = s;
  r.norm2 = h.norm2();
  r.distance_to_k_local = distance_to_local(h, k);
  r.distance_to_s_sparse = distance_to_sparse(h, s);
  for (const auto& [x, v] : ranked_terms(h)) r.sorted_magnitudes.push_back(std::abs(v));
  return r;
}

Hamiltonian parse_hamiltonian_text(std::istream& in) {
  std::string line;
  int n = -1;
  size_t lineno = 0;
  std::vector<std::pair<PauliString, double>> entries;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string label, value, extra;
    if (!(ls >> label)) continue;
    if (!(ls >> value) || (ls >> extra)) {
      throw IoError("line " + std::to_string(lineno) + ": expected 'LABEL coefficient'");
    }
    double v;
    try {
      size_t used = 0;
      v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw IoError("line " + std::to_string(lineno) + ": bad coefficient '" + value + "'");
    }
    if (!std::isfinite(v)) throw ValidationError("line " + std::to_string(lineno) + ": non-finite coefficient");
    PauliString x = PauliString::from_label(label);
    if (n < 0) n = x.num_qubits();
    if (x.num_qubits() != n) throw DimensionError("line " + std::to_string(lineno) + ": inconsistent qubit count");
    if (!seen.insert(x.label()).second) {
      throw ValidationError("line " + std::to_string(lineno) + ": duplicate label " + x.label());
    }
    entries.emplace_back(x, v);
  }
  if (n < 0) throw IoError("no terms found");
  Hamiltonian h(n);
  for (const auto& [x, v] : entries) h.set_term(x, v);
  return h;
}

Hamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  return parse_hamiltonian_text(f);
}

std::string format_hamiltonian_text(const Hamiltonian& h) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const auto& [x, v] : h.terms()) os << x.label() << ' ' << v << '\n';
  return os.str();
}

void save_hamiltonian(const Hamiltonian& h, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << format_hamiltonian_text(h);
}

}  // namespace hamprobe
