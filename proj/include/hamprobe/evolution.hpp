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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hamprobe/dense.hpp"
#include "hamprobe/hamiltonian.hpp"
#include "hamprobe/mub.hpp"
#include "hamprobe/rng.hpp"

namespace hamprobe {

/// Pauli coefficients U_x = Tr(sigma_x U)/2^n of a unitary, indexed by PauliString::index().
class UnitarySpectrum {
 public:
  UnitarySpectrum(int n, double t, std::vector<cplx> coeffs);

  int num_qubits() const { return n_; }
  double time() const { return t_; }
  const std::vector<cplx>& coefficients() const { return coeffs_; }
  cplx coefficient(const PauliString& x) const { return coeffs_.at(x.index()); }
  /// |U_x|^2 for every x; sums to 1.
  std::vector<double> probabilities() const;

 private:
  int n_;
  double t_;
  std::vector<cplx> coeffs_;
};

/// Reusable eigendecomposition H = V D V^dagger.
class Propagator {
 public:
  explicit Propagator(const Hamiltonian& h);
  int num_qubits() const { return n_; }
  double operator_norm() const;
  /// V exp(-i D t) V^dagger.
  Eigen::MatrixXcd unitary(double t) const;
  UnitarySpectrum spectrum(double t) const;

 private:
  int n_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;
};

Eigen::MatrixXcd evolution_unitary(const Hamiltonian& h, double t);
UnitarySpectrum evolution_spectrum(const Hamiltonian& h, double t);

/// |U_0|^2 plus the s largest |U_x|^2 over x != 0.
struct TopEnergyStat {
  double t = 0.0;
  int64_t s = 0;
  double value = 0.0;
  std::vector<PauliString> top;  // the selected non-identity strings
};
TopEnergyStat top_energy(std::span<const double> probs, int n, int64_t s, double t = 0.0);
TopEnergyStat top_energy(const UnitarySpectrum& spec, int64_t s);

enum class OracleMode { exact, shot_noise };

/// Monotone counters of oracle usage. evolution_time is sum over queries of |t|.
struct QueryLedger {
  uint64_t queries = 0;
  double evolution_time = 0.0;
};

inline QueryLedger operator-(const QueryLedger& a, const QueryLedger& b) {
  return {a.queries - b.queries, a.evolution_time - b.evolution_time};
}

struct OracleOptions {
  OracleMode mode = OracleMode::shot_noise;
  /// Per-call cap on shots or rounds; larger requests are clamped and flagged.
  uint64_t max_shots = 10'000'000'000ull;
};

struct ShotBudget {
  uint64_t shots = 0;
  bool clamped = false;
};

/// Query access to t -> exp(-iHt) for a hidden H with ||H||_inf <= 1.
///
/// In exact mode every probabilistic routine receives true probabilities or
/// means; the ledger still records the nominal budget. Shot noise is always
/// drawn from exactly computed probabilities using the oracle's own engine.
class EvolutionOracle {
 public:
  EvolutionOracle(const Hamiltonian& h, uint64_t seed, OracleOptions options = {});
  /// Oracle for a fixed unitary; the time argument only feeds the ledger.
  static EvolutionOracle from_unitary(const Eigen::MatrixXcd& u, uint64_t seed, OracleOptions options = {});

  int num_qubits() const { return n_; }
  OracleMode mode() const { return options_.mode; }
  bool exact() const { return options_.mode == OracleMode::exact; }
  uint64_t seed() const { return seed_; }
  const QueryLedger& ledger() const { return ledger_; }
  const OracleOptions& options() const { return options_; }

  ShotBudget clamp(double requested) const;

  // Simulator-side access used by the sampling routines below.
  const UnitarySpectrum& spectrum(double t);
  const Eigen::MatrixXcd& unitary(double t);
  /// For each MUB basis i, the matrix P_i(l, j) = |<phi_il| U |phi_ij>|^2.
  const std::vector<Eigen::MatrixXd>& mub_transitions(double t);
  const MubFamily& mub();
  Rng& rng() { return rng_; }
  void charge(uint64_t queries, double t);

 private:
  EvolutionOracle(int n, uint64_t seed, OracleOptions options);

  int n_;
  uint64_t seed_;
  OracleOptions options_;
  Rng rng_;
  QueryLedger ledger_;
  std::optional<Propagator> propagator_;
  std::optional<Eigen::MatrixXcd> fixed_unitary_;
  std::map<double, std::unique_ptr<UnitarySpectrum>> spectra_;
  std::map<double, Eigen::MatrixXcd> unitaries_;
  std::map<double, std::vector<Eigen::MatrixXd>> transitions_;
  std::unique_ptr<MubFamily> mub_;
};

/// Bell-basis measurements of the Choi state of U(t): x with probability |U_x|^2.
std::vector<PauliString> bell_sample(EvolutionOracle& oracle, double t, uint64_t shots);

/// Empirical distribution over all 4^n strings from `shots` Bell samples, or the
/// exact distribution in exact mode. Charges `shots` queries.
std::vector<double> bell_distribution(EvolutionOracle& oracle, double t, uint64_t shots);

struct CoefficientEstimate {
  cplx value;
  uint64_t shots = 0;
  bool clamped = false;
};

/// Estimates U_x via controlled-U and Hadamard tests on both quadratures,
/// hoeffding_count(eps/sqrt 2, delta/2, c) shots each.
CoefficientEstimate estimate_coefficient(EvolutionOracle& oracle, double t, const PauliString& x,
                                         double eps, double delta, double c = 2.0);

struct MemorylessEstimate {
  std::vector<double> values;  // aligned with the queried strings
  uint64_t rounds = 0;
  bool clamped = false;
};

/// Estimates |U_x|^2 for x in `strings` from single-copy MUB experiments.
/// Each round picks a uniform basis i and state j, measures U|phi_ij> in basis i
/// and records a hit for x when the outcome equals shift_index(i, j, x). The
/// hit rate is 1/(N+1) + N|U_x|^2/(N+1), which is debiased.
MemorylessEstimate memoryless_pauli_sampling(EvolutionOracle& oracle, double t,
                                             std::span<const PauliString> strings, double eps,
                                             double delta, double c = 2.0);

/// Exact hit rate E[|alpha_x|^2] before debiasing, by enumeration over (i, j).
double memoryless_hit_rate(EvolutionOracle& oracle, double t, const PauliString& x);

/// x' and x'' with [x', x''] = 1 and sigma_x' sigma_x'' = a sigma_x, a = +-i.
/// x' is a single-qubit Pauli on the first qubit in the support of x.
struct AnticommutingFactorization {
  PauliString x1;
  PauliString x2;
  int a_phase_exp = 1;  // a = i^{a_phase_exp}
};
AnticommutingFactorization canonical_factorization(const PauliString& x);

/// Estimates lambda_x without ancillas: prepare exp(-i eps H)(I - sigma_x')/2^n exp(i eps H),
/// measure sigma_x'' and return mean / (2 i eps a). Uses hoeffding_count(eps^2, delta, c) rounds.
CoefficientEstimate memoryless_estimate_coefficient(EvolutionOracle& oracle, const PauliString& x,
                                                    double eps, double delta, double c = 2.0);

/// Noise-free value of the sigma_x'' expectation used above.
double memoryless_coefficient_mean(EvolutionOracle& oracle, const PauliString& x, double eps);

}  // namespace hamprobe
