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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hamprobe/decision.hpp"
#include "hamprobe/evolution.hpp"

namespace hamprobe {

struct TesterConstants {
  /// Taylor remainder constant c in t = (eps2 - eps1)/(3c).
  double taylor_c = 1.0;
  /// Leading constant on every sample count.
  double c_T = 1.0;
  /// Evolution-time constant of the sparsity tester, t = c_t (eps2^2 - eps1^2)/s.
  double c_t = 1.0;
};

/// A candidate support, given as a membership predicate.
struct Support {
  std::string name;
  std::function<bool(const PauliString&)> contains;
};

/// Strings acting on at most k qubits.
Support weight_support(int k);
Support explicit_support(std::string name, const std::vector<PauliString>& strings);

/// Weight of a distribution outside a support.
double weight_outside(std::span<const double> probs, int n, const Support& s);

/// Locality tester. Evolves for t = (eps2 - eps1)/(3c) and Bell-samples
/// T = ceil(c_T ln(1/delta) / (eps2 - eps1)^4) times.
///  1. alpha' = fraction of samples acting on more than k qubits;
///     alpha' >= (3/4)(eps2 - eps1)^2 declares far.
///  2. Otherwise a fresh batch gives alpha''; far iff
///     sqrt(alpha'') >= (eps2 - eps1)(eps1 + 2 eps2)/(9c) - (eps2 - eps1)^2/(18c).
Decision test_locality(EvolutionOracle& oracle, int k, double eps1, double eps2, double delta, Rng& rng,
                       const TesterConstants& c = {});

/// The same procedure for M candidate supports, sharing one pair of sample
/// batches with T = ceil(c_T ln(M/delta) / (eps2 - eps1)^4).
std::vector<Decision> test_support(EvolutionOracle& oracle, const std::vector<Support>& supports, double eps1,
                                   double eps2, double delta, Rng& rng, const TesterConstants& c = {});

/// Sparsity tester with quantum memory. t = c_t Delta/s with Delta = eps2^2 - eps1^2,
/// T = ceil(c_T s^6 / Delta^12 ln(1/delta)); Gamma = |alpha_0|^2 + top s others.
/// Accepts iff Gamma >= 1 - eps1^2 t^2 - Delta t^2 / 2.
Decision test_sparsity(EvolutionOracle& oracle, int64_t s, double eps1, double eps2, double delta, Rng& rng,
                       const TesterConstants& c = {});

/// Largest weight sum_{supp(x) in K} p(x) over k-subsets K of the qubits.
/// `probs` may be dense (4^n) or only cover weight <= k strings via `strings`.
double junta_best_weight(std::span<const double> probs, std::span<const PauliString> strings, int n, int k,
                         uint64_t* best_mask = nullptr);

/// k-junta tester for a unitary (use EvolutionOracle::from_unitary for raw
/// unitaries; `t` is the evolution time passed to the oracle). Estimates
/// |U_x|^2 to l_inf error (eps2^2/4 - eps1^2)/(2 4^k) and accepts iff some
/// k-set carries weight >= 1 - (eps1^2 + eps2^2/4)/2. Exhaustive over k-sets.
Decision test_junta(EvolutionOracle& oracle, int k, double eps1, double eps2, double delta, bool memory,
                    Rng& rng, const TesterConstants& c = {}, double t = 1.0);

}  // namespace hamprobe
