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

#include "hamprobe/evolution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "hamprobe/error.hpp"
#include "hamprobe/sampling.hpp"

namespace hamprobe {

UnitarySpectrum::UnitarySpectrum(int n, double t, std::vector<cplx> coeffs)
    : n_(n), t_(t), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != (size_t{1} << (2 * n))) throw DimensionError("UnitarySpectrum: need 4^n coefficients");
}

std::vector<double> UnitarySpectrum::probabilities() const {
  std::vector<double> p(coeffs_.size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = std::norm(coeffs_[i]);
  return p;
}

Propagator::Propagator(const Hamiltonian& h) : n_(h.num_qubits()) {
  require_dense(n_, "Propagator");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(synthesize(h));
  if (es.info() != Eigen::Success) throw ValidationError("eigendecomposition failed");
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();
}

double Propagator::operator_norm() const { return evals_.size() ? evals_.cwiseAbs().maxCoeff() : 0.0; }

Eigen::MatrixXcd Propagator::unitary(double t) const {
  Eigen::VectorXcd phases(evals_.size());
  for (Eigen::Index i = 0; i < evals_.size(); ++i) phases(i) = std::polar(1.0, -evals_(i) * t);
  return evecs_ * phases.asDiagonal() * evecs_.adjoint();
}

UnitarySpectrum Propagator::spectrum(double t) const {
  return UnitarySpectrum(n_, t, pauli_coefficients(unitary(t), n_));
}

Eigen::MatrixXcd evolution_unitary(const Hamiltonian& h, double t) { return Propagator(h).unitary(t); }

UnitarySpectrum evolution_spectrum(const Hamiltonian& h, double t) { return Propagator(h).spectrum(t); }

TopEnergyStat top_energy(std::span<const double> probs, int n, int64_t s, double t) {
  if (probs.size() != (size_t{1} << (2 * n))) throw DimensionError("top_energy: need 4^n probabilities");
  if (s < 0) throw ParameterError("top_energy: s must be non-negative");
  std::vector<uint64_t> idx(probs.size() - 1);
  std::iota(idx.begin(), idx.end(), 1);
  size_t take = std::min(idx.size(), static_cast<size_t>(s));
  auto better = [&](uint64_t a, uint64_t b) {
    if (probs[a] != probs[b]) return probs[a] > probs[b];
    return PauliString::from_index(n, a) < PauliString::from_index(n, b);
  };
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take), idx.end(), better);
  TopEnergyStat r;
  r.t = t;
  r.s = s;
  r.value = probs[0];
  for (size_t i = 0; i < take; ++i) {
    r.value += probs[idx[i]];
    r.top.push_back(PauliString::from_index(n, idx[i]));
  }
  return r;
}

TopEnergyStat top_energy(const UnitarySpectrum& spec, int64_t s) {
  auto p = spec.probabilities();
  return top_energy(p, spec.num_qubits(), s, spec.time());
}

// ---------------------------------------------------------------------------

EvolutionOracle::EvolutionOracle(int n, uint64_t seed, OracleOptions options)
    : n_(n), seed_(seed), options_(options), rng_(seed) {}

EvolutionOracle::EvolutionOracle(const Hamiltonian& h, uint64_t seed, OracleOptions options)
    : EvolutionOracle(h.num_qubits(), seed, options) {
  propagator_.emplace(h);
  double norm = propagator_->operator_norm();
  if (norm > 1.0 + 1e-9) {
    throw ValidationError("oracle target must satisfy ||H||_inf <= 1, got " + std::to_string(norm));
  }
}

EvolutionOracle EvolutionOracle::from_unitary(const Eigen::MatrixXcd& u, uint64_t seed, OracleOptions options) {
  const auto dim = static_cast<uint64_t>(u.rows());
  if (!std::has_single_bit(dim) || u.cols() != u.rows()) throw DimensionError("from_unitary: not 2^n x 2^n");
  int n = std::countr_zero(dim);
  require_dense(n, "EvolutionOracle::from_unitary");
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  if ((u.adjoint() * u - id).cwiseAbs().maxCoeff() > 1e-9) throw ValidationError("from_unitary: matrix is not unitary");
  EvolutionOracle o(n, seed, options);
  o.fixed_unitary_ = u;
  return o;
}

ShotBudget EvolutionOracle::clamp(double requested) const {
  uint64_t want = std::max<uint64_t>(1, ceil_count(requested));
  if (want > options_.max_shots) return {options_.max_shots, true};
  return {want, false};
}

const Eigen::MatrixXcd& EvolutionOracle::unitary(double t) {
  auto it = unitaries_.find(t);
  if (it != unitaries_.end()) return it->second;
  Eigen::MatrixXcd u = fixed_unitary_ ? *fixed_unitary_ : propagator_->unitary(t);
  return unitaries_.emplace(t, std::move(u)).first->second;
}

const UnitarySpectrum& EvolutionOracle::spectrum(double t) {
  auto it = spectra_.find(t);
  if (it != spectra_.end()) return *it->second;
  auto spec = std::make_unique<UnitarySpectrum>(n_, t, pauli_coefficients(unitary(t), n_));
  return *spectra_.emplace(t, std::move(spec)).first->second;
}

const MubFamily& EvolutionOracle::mub() {
  if (!mub_) mub_ = std::make_unique<MubFamily>(n_);
  return *mub_;
}

const std::vector<Eigen::MatrixXd>& EvolutionOracle::mub_transitions(double t) {
  auto it = transitions_.find(t);
  if (it != transitions_.end()) return it->second;
  const MubFamily& m = mub();
  const Eigen::MatrixXcd& u = unitary(t);
  std::vector<Eigen::MatrixXd> out;
  out.reserve(m.num_bases());
  for (uint64_t i = 0; i < m.num_bases(); ++i) {
    Eigen::MatrixXcd b = m.basis_matrix(i);
    out.push_back((b.adjoint() * u * b).cwiseAbs2());
  }
  return transitions_.emplace(t, std::move(out)).first->second;
}

void EvolutionOracle::charge(uint64_t queries, double t) {
  ledger_.queries += queries;
  ledger_.evolution_time += static_cast<double>(queries) * std::abs(t);
}

// ---------------------------------------------------------------------------

std::vector<PauliString> bell_sample(EvolutionOracle& oracle, double t, uint64_t shots) {
  auto probs = oracle.spectrum(t).probabilities();
  std::vector<double> cdf(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cdf.begin());
  oracle.charge(shots, t);
  std::vector<PauliString> out;
  out.reserve(shots);
  const int n = oracle.num_qubits();
  for (uint64_t s = 0; s < shots; ++s) {
    double u = uniform01(oracle.rng()) * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    size_t idx = std::min(static_cast<size_t>(it - cdf.begin()), cdf.size() - 1);
    out.push_back(PauliString::from_index(n, idx));
  }
  return out;
}

std::vector<double> bell_distribution(EvolutionOracle& oracle, double t, uint64_t shots) {
  auto probs = oracle.spectrum(t).probabilities();
  oracle.charge(shots, t);
  if (oracle.exact() || shots == 0) return probs;
  auto counts = multinomial(oracle.rng(), shots, probs);
  std::vector<double> out(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) out[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
  return out;
}

CoefficientEstimate estimate_coefficient(EvolutionOracle& oracle, double t, const PauliString& x,
                                         double eps, double delta, double c) {
  if (x.num_qubits() != oracle.num_qubits()) throw DimensionError("estimate_coefficient: wrong qubit count");
  ShotBudget b = oracle.clamp(static_cast<double>(hoeffding_count(eps / std::sqrt(2.0), delta / 2, c)));
  cplx truth = oracle.spectrum(t).coefficient(x);
  oracle.charge(2 * b.shots, t);
  if (oracle.exact()) return {truth, b.shots, b.clamped};
  // Hadamard test: outcome +1 with probability (1 + Re U_x)/2, likewise for Im.
  auto quad = [&](double mean) {
    double p = std::clamp((1.0 + mean) / 2.0, 0.0, 1.0);
    uint64_t k = binomial(oracle.rng(), b.shots, p);
    return 2.0 * static_cast<double>(k) / static_cast<double>(b.shots) - 1.0;
  };
  double re = quad(truth.real());
  double im = quad(truth.imag());
  return {cplx(re, im), b.shots, b.clamped};
}

double memoryless_hit_rate(EvolutionOracle& oracle, double t, const PauliString& x) {
  const MubFamily& m = oracle.mub();
  const auto& trans = oracle.mub_transitions(t);
  const uint64_t N = m.dimension();
  double acc = 0.0;
  for (uint64_t i = 0; i < m.num_bases(); ++i) {
    uint64_t syn = m.syndrome(i, x);
    for (uint64_t j = 0; j < N; ++j) acc += trans[i](static_cast<Eigen::Index>(j ^ syn), static_cast<Eigen::Index>(j));
  }
  return acc / static_cast<double>(N * (N + 1));
}

MemorylessEstimate memoryless_pauli_sampling(EvolutionOracle& oracle, double t,
                                             std::span<const PauliString> strings, double eps,
                                             double delta, double c) {
  const int n = oracle.num_qubits();
  for (const auto& x : strings) {
    if (x.num_qubits() != n) throw DimensionError("memoryless_pauli_sampling: wrong qubit count");
  }
  const MubFamily& m = oracle.mub();
  const uint64_t N = m.dimension();
  const double Nd = static_cast<double>(N);
  double m_strings = std::max<double>(1.0, static_cast<double>(strings.size()));
  // Hits are 0/1, so a +-1 Hoeffding count at twice the frequency error suffices.
  double freq_eps = eps * Nd / (Nd + 1.0);
  ShotBudget b = oracle.clamp(static_cast<double>(hoeffding_count(2.0 * freq_eps, std::min(delta / m_strings, 0.5), c)));
  oracle.charge(b.shots, t);
  MemorylessEstimate out;
  out.rounds = b.shots;
  out.clamped = b.clamped;
  const auto& trans = oracle.mub_transitions(t);
  auto debias = [&](double hit) { return (Nd + 1.0) / Nd * hit - 1.0 / Nd; };
  if (oracle.exact()) {
    for (const auto& x : strings) out.values.push_back(debias(memoryless_hit_rate(oracle, t, x)));
    return out;
  }
  // counts[i][j][l]: rounds with basis i, input j and outcome l
  const uint64_t cells = N * (N + 1);
  std::vector<double> uniform(cells, 1.0 / static_cast<double>(cells));
  auto per_cell = multinomial(oracle.rng(), b.shots, uniform);
  std::vector<std::vector<uint64_t>> counts(cells);
  std::vector<double> col(N);
  for (uint64_t cell = 0; cell < cells; ++cell) {
    uint64_t i = cell / N, j = cell % N;
    for (uint64_t l = 0; l < N; ++l) col[l] = trans[i](static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j));
    counts[cell] = multinomial(oracle.rng(), per_cell[cell], col);
  }
  for (const auto& x : strings) {
    uint64_t hits = 0;
    for (uint64_t i = 0; i < m.num_bases(); ++i) {
      uint64_t syn = m.syndrome(i, x);
      for (uint64_t j = 0; j < N; ++j) hits += counts[i * N + j][j ^ syn];
    }
    out.values.push_back(debias(static_cast<double>(hits) / static_cast<double>(b.shots)));
  }
  return out;
}

AnticommutingFactorization canonical_factorization(const PauliString& x) {
  if (x.is_identity()) throw ParameterError("identity has no anticommuting factorization");
  const int n = x.num_qubits();
  int q = std::countr_zero(x.support_mask());
  // partner on qubit q chosen so that sigma_x' sigma_x'' = +i sigma_x
  char partner = 'X';
  switch (x.at(q)) {
    case 'X': partner = 'Y'; break;
    case 'Y': partner = 'Z'; break;
    default: partner = 'X'; break;
  }
  PauliString x1 = PauliString::single(n, q, partner);
  PauliString x2 = x ^ x1;
  PhasedPauli prod = pauli_product(x1, x2);
  return {x1, x2, prod.phase_exp};
}

double memoryless_coefficient_mean(EvolutionOracle& oracle, const PauliString& x, double eps) {
  auto f = canonical_factorization(x);
  const Eigen::MatrixXcd& u = oracle.unitary(eps);
  // Tr[sigma_x'' U (I - sigma_x') U^dagger] / 2^n = -Tr[sigma_x'' U sigma_x' U^dagger] / 2^n
  Eigen::MatrixXcd us = left_multiply_pauli(f.x1, u.adjoint()).adjoint();  // U sigma_x'
  Eigen::MatrixXcd m = left_multiply_pauli(f.x2, us * u.adjoint());
  return -m.trace().real() / static_cast<double>(u.rows());
}

CoefficientEstimate memoryless_estimate_coefficient(EvolutionOracle& oracle, const PauliString& x,
                                                    double eps, double delta, double c) {
  if (x.num_qubits() != oracle.num_qubits()) throw DimensionError("memoryless_estimate_coefficient: wrong qubit count");
  if (!(eps > 0)) throw ParameterError("memoryless_estimate_coefficient: eps must be positive");
  auto f = canonical_factorization(x);
  double mean = memoryless_coefficient_mean(oracle, x, eps);
  ShotBudget b = oracle.clamp(static_cast<double>(hoeffding_count(eps * eps, delta, c)));
  oracle.charge(b.shots, eps);
  if (!oracle.exact()) {
    double p = std::clamp((1.0 + mean) / 2.0, 0.0, 1.0);
    uint64_t k = binomial(oracle.rng(), b.shots, p);
    mean = 2.0 * static_cast<double>(k) / static_cast<double>(b.shots) - 1.0;
  }
  // mean ~ 2 i eps a lambda_x
  cplx denom = 2.0 * cplx(0, 1) * eps * i_pow(f.a_phase_exp);
  cplx value = cplx(mean, 0.0) / denom;
  return {cplx(value.real(), 0.0), b.shots, b.clamped};
}

}  // namespace hamprobe
