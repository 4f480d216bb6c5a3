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

#include <span>
#include <string>
#include <vector>

#include "hamprobe/channel.hpp"
#include "hamprobe/decision.hpp"
#include "hamprobe/evolution.hpp"
#include "hamprobe/subgroup.hpp"

namespace hamprobe {

// --- Fourier analysis on F_2^{2n} -------------------------------------------
// Functions f : F_2^{2n} -> R are dense vectors of length 4^n in index() layout.

/// P_{a+V} f(z) = E_{x in C(V)} f(x + z) chi_a(x), chi_a(x) = (-1)^{[a, x]}.
double project_coset(std::span<const double> f, const PauliString& a, const SymplecticSubgroup& v,
                     const PauliString& z);

/// sum_{alpha in a+V} fhat(alpha)^2 computed from the Fourier transform.
double coset_weight(std::span<const double> f, const PauliString& a, const SymplecticSubgroup& v);

/// The same weight as E_{x, z in C(V)} [chi_a(z) f(x) f(x + z)].
double coset_weight_autocorrelation(std::span<const double> f, const PauliString& a,
                                    const SymplecticSubgroup& v);

// --- Bucket energies ----------------------------------------------------------

struct BucketTable {
  SymplecticSubgroup subgroup;
  /// energies[b] for the bucket with label b.
  std::vector<double> energies;
  std::string provenance;  // "exact", "coset_sum" or "estimated"
  double eps = 0.0;
  double delta = 0.0;
  uint64_t shots_per_fidelity = 0;
  bool clamped = false;
};

/// Fidelity-sum route: E(b) = 2^{-t} sum_{z in V} lambda(z) (-1)^{[z, a_b]},
/// evaluated with one Walsh-Hadamard transform over subgroup coordinates.
std::vector<double> bucket_energies_from_fidelities(std::span<const double> subgroup_fidelities, int t);

BucketTable bucket_energies_exact(const PauliChannel& ch, const SymplecticSubgroup& v);

/// Direct route: E(b) = sum of p(x) over the coset C(b).
BucketTable bucket_energies_coset_sum(const PauliChannel& ch, const SymplecticSubgroup& v);

/// Per-fidelity shots ceil(c ln(2^t / delta) / eps^2), i.e. a total budget of
/// ceil(c 2^t / eps^2 ln(2^t / delta)) across the 2^t subgroup elements.
uint64_t hashing_shots_per_fidelity(int t, double eps, double delta, double c = 1.0);

BucketTable estimate_bucket_energies(ChannelOracle& oracle, const SymplecticSubgroup& v, double eps,
                                     double delta, double c = 1.0);

/// Bucket energies of the twirled evolution channel, with `shots` rounds per
/// subgroup element. Each round's outcome has mean
/// lambda_t(z) = sum_x (-1)^{[x, z]} |U_x(t)|^2.
BucketTable estimate_bucket_energies_hamiltonian(EvolutionOracle& oracle, double t_evol,
                                                 const SymplecticSubgroup& v, uint64_t shots);

/// Sum of the `s` largest entries (all of them if fewer).
double sum_top(std::span<const double> values, int64_t s);

// --- Testers -----------------------------------------------------------------

struct HashingConstants {
  /// Leading constant of the per-fidelity shot count.
  double c = 1.0;
  /// Evolution time t = c_t (eps2^2 - eps1^2) / s for the Hamiltonian tester.
  double c_t = 1.0 / 3.0;
};

/// eps = (eps2 - 2 eps1)/3, t = min(2n, ceil(log2(2s/eps^2))).
/// Accepts when Gamma >= 1 - 2 eps1 - eps, rejects when Gamma <= 1 - eps2 + eps.
Decision test_channel_sparsity(ChannelOracle& oracle, int64_t s, double eps1, double eps2, double delta,
                               Rng& rng, const HashingConstants& k = {});

/// Memory-less Hamiltonian sparsity tester on the twirled evolution channel.
/// Gamma = E(0) + top s of the remaining buckets; thresholds
/// 1 - eps1^2 t^2 - Delta t^2 / 2 and 1 - eps2^2 t^2 + Delta t^2 / 2, Delta = eps2^2 - eps1^2.
Decision test_hamiltonian_sparsity_memoryless(EvolutionOracle& oracle, int64_t s, double eps1, double eps2,
                                              double delta, Rng& rng, const HashingConstants& k = {});

// --- Diagnostics --------------------------------------------------------------

struct HashingDiagnostics {
  int t = 0;
  int64_t s = 0;
  std::vector<double> sorted_energies;  // E_1 >= E_2 >= ...
  std::vector<double> max_rates;        // E'_j, the largest rate in bucket j
  std::vector<double> err;              // E_j - p_{y_j}, j <= s
  double err_total = 0.0;
  /// sum of the top s bucket energies minus Energy(s).
  double gamma_minus_energy = 0.0;
};

/// With `hamiltonian_form`, bucket 0 and the identity are split off first and
/// the remaining s buckets and strings are ranked without them.
HashingDiagnostics hashing_diagnostics(const PauliChannel& ch, const SymplecticSubgroup& v, int64_t s,
                                       bool hamiltonian_form = false);

}  // namespace hamprobe
