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

#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hamprobe/evolution.hpp"
#include "hamprobe/hamiltonian.hpp"
#include "hamprobe/rng.hpp"

namespace hamprobe {

/// E(rho) = sum_x p(x) sigma_x rho sigma_x with p a probability distribution.
class PauliChannel {
 public:
  /// Validates p >= 0 and sum p = 1 within tol.
  PauliChannel(int n, std::map<PauliString, double> rates, double tol = 1e-9);
  /// Dense rates in index() layout; zeros are dropped.
  static PauliChannel from_dense(int n, std::span<const double> rates, double tol = 1e-9);

  int num_qubits() const { return n_; }
  const std::map<PauliString, double>& rates() const { return rates_; }
  double rate(const PauliString& x) const;
  std::vector<double> dense_rates() const;

 private:
  int n_;
  std::map<PauliString, double> rates_;
};

/// lambda(y) = sum_x (-1)^{[x, y]} p(x).
double pauli_fidelity(const PauliChannel& ch, const PauliString& y);
/// All fidelities, index() layout. O(n 4^n).
std::vector<double> pauli_fidelities(const PauliChannel& ch);
/// p(alpha) = 4^{-n} sum_y (-1)^{[alpha, y]} lambda(y).
std::vector<double> rates_from_fidelities(std::span<const double> fidelities, int n);

/// Sum of the s largest rates.
double channel_energy(const PauliChannel& ch, int64_t s);
/// 1 - Energy(s): total-variation distance to the nearest s-sparse channel.
double distance_to_sparse_channel(const PauliChannel& ch, int64_t s);
/// (1/2) sum_x |p(x) - q(x)|.
double channel_distance(const PauliChannel& a, const PauliChannel& b);

/// Pauli twirl of rho -> U(t) rho U(t)^dagger: rates |U_x(t)|^2.
PauliChannel twirled_channel(const UnitarySpectrum& spec);
PauliChannel twirled_channel_from_evolution(const Hamiltonian& h, double t);

/// Query access to a Pauli channel through single-shot fidelity experiments:
/// prepare (I + sigma_z)/2^n, apply the channel, measure sigma_z.
class ChannelOracle {
 public:
  ChannelOracle(PauliChannel channel, uint64_t seed, OracleOptions options = {});

  int num_qubits() const { return channel_.num_qubits(); }
  bool exact() const { return options_.mode == OracleMode::exact; }
  const QueryLedger& ledger() const { return ledger_; }
  uint64_t seed() const { return seed_; }
  ShotBudget clamp(double requested) const;

  /// Mean of `shots` +-1 outcomes with expectation lambda(z) (exact value in exact mode).
  double fidelity_shot(const PauliString& z, uint64_t shots);

 private:
  PauliChannel channel_;
  uint64_t seed_;
  OracleOptions options_;
  Rng rng_;
  QueryLedger ledger_;
};

struct LoadedChannel {
  PauliChannel channel;
  /// True when rates summed to 1 only within 1e-6 and were rescaled.
  bool renormalized = false;
};

/// Same "LABEL value" format as Hamiltonians. Negative rates and sums off by
/// more than 1e-6 are rejected.
LoadedChannel parse_channel_text(std::istream& in);
LoadedChannel load_channel(const std::string& path);
std::string format_channel_text(const PauliChannel& ch);

enum class ChannelKind { close_to_sparse, far_from_sparse, depolarizing };

/// close_to_sparse: distance to s-sparse at most eps.
/// far_from_sparse: distance at least eps (mixing towards a uniform spread).
/// depolarizing: p(0) = 1 - eps, the remaining mass uniform.
PauliChannel generate_channel(ChannelKind kind, int n, int64_t s, double eps, Rng& rng);

}  // namespace hamprobe
