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

#include "hamprobe/learners.hpp"

#include <algorithm>
#include <cmath>

#include "hamprobe/error.hpp"
#include "hamprobe/sampling.hpp"

namespace hamprobe {

namespace {

void check(double eps, double delta) {
  if (!(eps > 0) || !(delta > 0) || !(delta < 1)) throw ParameterError("learner needs eps > 0 and 0 < delta < 1");
}

// Stage 2 shared by both learners. `u_accuracy` is the target error on U_x.
// The memory-less estimator works directly on lambda, with accuracy
// max(u_accuracy / t, eps / (2 sqrt m)) for m detected strings.
void estimate_coefficients(EvolutionOracle& oracle, LearnReport& r, double t, double u_accuracy, double eps,
                           double delta, bool memory, const LearnerConstants& c) {
  const double m = std::max<double>(1.0, static_cast<double>(r.detected.size()));
  const double per = delta / (2.0 * m);
  const double lambda_accuracy = std::max(u_accuracy / t, eps / (2.0 * std::sqrt(m)));
  for (const auto& x : r.detected) {
    double lambda;
    if (memory) {
      CoefficientEstimate e = estimate_coefficient(oracle, t, x, u_accuracy, per, c.c_coef);
      lambda = -e.value.imag() / t;  // Re(i alpha / t)
      r.stage2_shots += e.shots;
      r.budget_clamped |= e.clamped;
    } else {
      CoefficientEstimate e = memoryless_estimate_coefficient(oracle, x, lambda_accuracy, per, c.c_coef);
      lambda = e.value.real();
      r.stage2_shots += e.shots;
      r.budget_clamped |= e.clamped;
    }
    if (lambda != 0.0) r.learned.set_term(x, lambda);
  }
}

}  // namespace

LearnReport learn_local(EvolutionOracle& oracle, int k, double eps, double delta, bool memory,
                        const LearnerConstants& c) {
  check(eps, delta);
  if (k < 1) throw ParameterError("learn_local: k must be at least 1");
  const int n = oracle.num_qubits();
  const double kd = k;
  const double t = std::pow(eps, kd + 1) * std::pow(c.C_BH, -kd * (kd + 1) / 2);
  const double gamma = t * t;
  const double beta = t * t * t * eps;
  QueryLedger before = oracle.ledger();
  LearnReport r;
  r.protocol = memory ? "learn_local" : "learn_local_memoryless";
  r.learned = Hamiltonian(n);
  r.target_eps = eps;
  r.evolution_time = t;
  std::vector<PauliString> candidates;
  for_each_weight_at_most(n, k, [&](const PauliString& x) {
    if (!x.is_identity()) candidates.push_back(x);
  });
  const double threshold = gamma * gamma;
  if (memory) {
    ShotBudget b = oracle.clamp(c.c_T * std::log(1.0 / delta) / std::pow(gamma, 4));
    auto dist = bell_distribution(oracle, t, b.shots);
    r.stage1_samples = b.shots;
    r.budget_clamped = b.clamped;
    for (const auto& x : candidates) {
      if (dist[x.index()] > threshold) r.detected.push_back(x);
    }
  } else {
    auto est = memoryless_pauli_sampling(oracle, t, candidates, threshold / 2, delta / 2, 2.0 * c.c_T);
    r.stage1_samples = est.rounds;
    r.budget_clamped = est.clamped;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (est.values[i] > threshold) r.detected.push_back(candidates[i]);
    }
  }
  estimate_coefficients(oracle, r, t, beta, eps, delta, memory, c);
  r.ledger = oracle.ledger() - before;
  return r;
}

LearnReport learn_sparse(EvolutionOracle& oracle, int64_t s, double eps, double delta, bool memory,
                         const LearnerConstants& c) {
  check(eps, delta);
  if (s < 1) throw ParameterError("learn_sparse: s must be positive");
  const int n = oracle.num_qubits();
  const double sd = static_cast<double>(s);
  const double t = c.c_t * eps / std::sqrt(sd);
  const double threshold = 2.0 * std::pow(eps, 4) / (sd * sd);
  QueryLedger before = oracle.ledger();
  LearnReport r;
  r.protocol = memory ? "learn_sparse" : "learn_sparse_memoryless";
  r.learned = Hamiltonian(n);
  r.target_eps = eps;
  r.evolution_time = t;
  if (memory) {
    ShotBudget b = oracle.clamp(c.c_T * std::pow(sd, 4) / std::pow(eps, 8) * std::log(1.0 / delta));
    auto dist = bell_distribution(oracle, t, b.shots);
    r.stage1_samples = b.shots;
    r.budget_clamped = b.clamped;
    for (size_t i = 1; i < dist.size(); ++i) {
      if (dist[i] > threshold) r.detected.push_back(PauliString::from_index(n, i));
    }
  } else {
    std::vector<PauliString> all;
    const uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t i = 1; i < total; ++i) all.push_back(PauliString::from_index(n, i));
    auto est = memoryless_pauli_sampling(oracle, t, all, threshold / 2, delta / 2, 2.0 * c.c_T);
    r.stage1_samples = est.rounds;
    r.budget_clamped = est.clamped;
    for (size_t i = 0; i < all.size(); ++i) {
      if (est.values[i] > threshold) r.detected.push_back(all[i]);
    }
  }
  std::sort(r.detected.begin(), r.detected.end());
  estimate_coefficients(oracle, r, t, t * eps / std::sqrt(sd), eps, delta, memory, c);
  r.ledger = oracle.ledger() - before;
  return r;
}

BranchCosts branch_costs(int k, int64_t s, double eps, double delta) {
  check(eps, delta);
  const double kd = k, sd = static_cast<double>(s), logd = std::log(1.0 / delta);
  return {std::exp(kd * kd + kd * std::log(1.0 / eps)) * logd, std::pow(sd, 4) / std::pow(eps, 8) * logd};
}

LearnReport learn_local_sparse(EvolutionOracle& oracle, int k, int64_t s, double eps, double delta, bool memory,
                               const LearnerConstants& c) {
  BranchCosts costs = branch_costs(k, s, eps, delta);
  bool local = costs.local <= costs.sparse;
  LearnReport r = local ? learn_local(oracle, k, eps, delta, memory, c) : learn_sparse(oracle, s, eps, delta, memory, c);
  r.branch = local ? "local" : "sparse";
  r.protocol = "learn_local_sparse";
  return r;
}

}  // namespace hamprobe
