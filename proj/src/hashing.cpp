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

#include "hamprobe/hashing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "hamprobe/error.hpp"
#include "hamprobe/sampling.hpp"
#include "hamprobe/walsh.hpp"

namespace hamprobe {

namespace {

void check_function(std::span<const double> f, int n) {
  if (f.size() != (size_t{1} << (2 * n))) throw DimensionError("function on F_2^{2n} must have 4^n entries");
}

std::vector<PauliString> complement_elements(const SymplecticSubgroup& v) {
  std::vector<PauliString> out;
  const int n = v.num_qubits();
  const uint64_t total = uint64_t{1} << (2 * n);
  for (uint64_t idx = 0; idx < total; ++idx) {
    PauliString x = PauliString::from_index(n, idx);
    if (v.in_complement(x)) out.push_back(x);
  }
  return out;
}

int ceil_log2(double v) { return v <= 1.0 ? 0 : static_cast<int>(std::ceil(std::log2(v) - 1e-12)); }

}  // namespace

double project_coset(std::span<const double> f, const PauliString& a, const SymplecticSubgroup& v,
                     const PauliString& z) {
  check_function(f, v.num_qubits());
  auto comp = complement_elements(v);
  double acc = 0.0;
  for (const auto& x : comp) {
    double chi = symplectic_inner(a, x) ? -1.0 : 1.0;
    acc += f[(x ^ z).index()] * chi;
  }
  return acc / static_cast<double>(comp.size());
}

double coset_weight(std::span<const double> f, const PauliString& a, const SymplecticSubgroup& v) {
  const int n = v.num_qubits();
  check_function(f, n);
  auto fhat = symplectic_fourier(f, n);
  double acc = 0.0;
  for (const auto& y : v.elements()) {
    double c = fhat[(a ^ y).index()];
    acc += c * c;
  }
  return acc;
}

double coset_weight_autocorrelation(std::span<const double> f, const PauliString& a,
                                    const SymplecticSubgroup& v) {
  const int n = v.num_qubits();
  check_function(f, n);
  auto comp = complement_elements(v);
  const uint64_t total = uint64_t{1} << (2 * n);
  double acc = 0.0;
  for (const auto& z : comp) {
    double chi = symplectic_inner(a, z) ? -1.0 : 1.0;
    double inner = 0.0;
    for (uint64_t idx = 0; idx < total; ++idx) inner += f[idx] * f[idx ^ z.index()];
    acc += chi * inner;
  }
  return acc / (static_cast<double>(total) * static_cast<double>(comp.size()));
}

std::vector<double> bucket_energies_from_fidelities(std::span<const double> subgroup_fidelities, int t) {
  if (subgroup_fidelities.size() != (size_t{1} << t)) throw DimensionError("need 2^t subgroup fidelities");
  std::vector<double> e(subgroup_fidelities.begin(), subgroup_fidelities.end());
  walsh_hadamard(std::span<double>(e));
  const double inv = 1.0 / static_cast<double>(e.size());
  for (double& v : e) v *= inv;
  return e;
}

BucketTable bucket_energies_exact(const PauliChannel& ch, const SymplecticSubgroup& v) {
  if (ch.num_qubits() != v.num_qubits()) throw DimensionError("channel and subgroup qubit counts differ");
  std::vector<double> fid;
  fid.reserve(size_t{1} << v.dim());
  for (const auto& z : v.elements()) fid.push_back(pauli_fidelity(ch, z));
  return {v, bucket_energies_from_fidelities(fid, v.dim()), "exact", 0.0, 0.0, 0, false};
}

BucketTable bucket_energies_coset_sum(const PauliChannel& ch, const SymplecticSubgroup& v) {
  if (ch.num_qubits() != v.num_qubits()) throw DimensionError("channel and subgroup qubit counts differ");
  std::vector<double> e(size_t{1} << v.dim(), 0.0);
  for (const auto& [x, p] : ch.rates()) e[v.bucket_index(x)] += p;
  return {v, std::move(e), "coset_sum", 0.0, 0.0, 0, false};
}

uint64_t hashing_shots_per_fidelity(int t, double eps, double delta, double c) {
  if (!(eps > 0) || !(delta > 0) || !(delta < 1)) throw ParameterError("need eps > 0 and 0 < delta < 1");
  double size = std::ldexp(1.0, t);
  return ceil_count(c * std::log(size / delta) / (eps * eps));
}

BucketTable estimate_bucket_energies(ChannelOracle& oracle, const SymplecticSubgroup& v, double eps,
                                     double delta, double c) {
  if (oracle.num_qubits() != v.num_qubits()) throw DimensionError("oracle and subgroup qubit counts differ");
  ShotBudget b = oracle.clamp(static_cast<double>(hashing_shots_per_fidelity(v.dim(), eps, delta, c)));
  std::vector<double> fid;
  for (const auto& z : v.elements()) fid.push_back(oracle.fidelity_shot(z, b.shots));
  return {v, bucket_energies_from_fidelities(fid, v.dim()), oracle.exact() ? "exact" : "estimated",
          eps, delta, b.shots, b.clamped};
}

BucketTable estimate_bucket_energies_hamiltonian(EvolutionOracle& oracle, double t_evol,
                                                 const SymplecticSubgroup& v, uint64_t shots) {
  const int n = oracle.num_qubits();
  if (n != v.num_qubits()) throw DimensionError("oracle and subgroup qubit counts differ");
  auto probs = oracle.spectrum(t_evol).probabilities();
  auto all_fid = symplectic_character_sum(probs, n);
  std::vector<double> fid;
  for (const auto& z : v.elements()) {
    double lambda = all_fid[z.index()];
    oracle.charge(shots, t_evol);
    if (!oracle.exact()) {
      // marginal over the uniformly random twirl element a
      double p = std::clamp((1.0 + lambda) / 2.0, 0.0, 1.0);
      uint64_t k = binomial(oracle.rng(), shots, p);
      lambda = 2.0 * static_cast<double>(k) / static_cast<double>(shots) - 1.0;
    }
    fid.push_back(lambda);
  }
  return {v, bucket_energies_from_fidelities(fid, v.dim()), oracle.exact() ? "exact" : "estimated",
          0.0, 0.0, shots, false};
}

double sum_top(std::span<const double> values, int64_t s) {
  std::vector<double> v(values.begin(), values.end());
  size_t take = std::min(v.size(), static_cast<size_t>(std::max<int64_t>(s, 0)));
  std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(take), v.end(), std::greater<>());
  double acc = 0.0;
  for (size_t i = 0; i < take; ++i) acc += v[i];
  return acc;
}

Decision test_channel_sparsity(ChannelOracle& oracle, int64_t s, double eps1, double eps2, double delta,
                               Rng& rng, const HashingConstants& k) {
  if (s < 1) throw ParameterError("test_channel_sparsity: s must be positive");
  if (!(eps1 >= 0) || !(2 * eps1 < eps2) || !(eps2 < 1)) {
    throw ParameterError("test_channel_sparsity: need 0 <= 2 eps1 < eps2 < 1");
  }
  const int n = oracle.num_qubits();
  const double eps = (eps2 - 2 * eps1) / 3.0;
  const int t = std::min(2 * n, ceil_log2(2.0 * static_cast<double>(s) / (eps * eps)));
  QueryLedger before = oracle.ledger();
  SymplecticSubgroup v = random_subgroup(n, t, rng);
  BucketTable table = estimate_bucket_energies(oracle, v, eps, delta, k.c);
  Decision d;
  d.protocol = "test_channel_sparsity";
  d.gamma = sum_top(table.energies, s);
  d.thresholds = {{"accept", 1.0 - 2.0 * eps1 - eps}, {"reject", 1.0 - eps2 + eps}, {"eps", eps},
                  {"t", static_cast<double>(t)}};
  if (d.gamma >= d.thresholds["accept"]) {
    d.verdict = Verdict::close;
  } else if (d.gamma <= d.thresholds["reject"]) {
    d.verdict = Verdict::far;
  } else {
    d.verdict = Verdict::undecided;
  }
  d.generators = v.generators();
  d.ledger = oracle.ledger() - before;
  d.seed = oracle.seed();
  d.budget_clamped = table.clamped;
  d.samples = table.shots_per_fidelity;
  return d;
}

Decision test_hamiltonian_sparsity_memoryless(EvolutionOracle& oracle, int64_t s, double eps1, double eps2,
                                              double delta, Rng& rng, const HashingConstants& k) {
  if (s < 1) throw ParameterError("test_hamiltonian_sparsity_memoryless: s must be positive");
  if (!(eps1 >= 0) || !(eps1 < eps2) || !(eps2 <= 1)) throw ParameterError("need 0 <= eps1 < eps2 <= 1");
  const int n = oracle.num_qubits();
  const double big_delta = eps2 * eps2 - eps1 * eps1;
  const double t_evol = k.c_t * big_delta / static_cast<double>(s);
  const double eps = big_delta * t_evol * t_evol / 6.0;
  const int d_dim = std::min(2 * n, ceil_log2(2.0 * static_cast<double>(s) / (eps * eps)));
  QueryLedger before = oracle.ledger();
  SymplecticSubgroup v = random_subgroup(n, d_dim, rng);
  ShotBudget b = oracle.clamp(static_cast<double>(hashing_shots_per_fidelity(d_dim, eps, delta, k.c)));
  BucketTable table = estimate_bucket_energies_hamiltonian(oracle, t_evol, v, b.shots);
  std::vector<double> rest(table.energies.begin() + 1, table.energies.end());
  Decision d;
  d.protocol = "test_hamiltonian_sparsity_memoryless";
  d.gamma = table.energies[0] + sum_top(rest, s);
  const double t2 = t_evol * t_evol;
  d.thresholds = {{"accept", 1.0 - eps1 * eps1 * t2 - 0.5 * big_delta * t2},
                  {"reject", 1.0 - eps2 * eps2 * t2 + 0.5 * big_delta * t2},
                  {"eps", eps},
                  {"d", static_cast<double>(d_dim)}};
  if (d.gamma >= d.thresholds["accept"]) {
    d.verdict = Verdict::close;
  } else if (d.gamma <= d.thresholds["reject"]) {
    d.verdict = Verdict::far;
  } else {
    d.verdict = Verdict::undecided;
  }
  d.generators = v.generators();
  d.ledger = oracle.ledger() - before;
  d.seed = oracle.seed();
  d.budget_clamped = b.clamped;
  d.samples = b.shots;
  d.evolution_time = t_evol;
  return d;
}

HashingDiagnostics hashing_diagnostics(const PauliChannel& ch, const SymplecticSubgroup& v, int64_t s,
                                       bool hamiltonian_form) {
  auto table = bucket_energies_coset_sum(ch, v);
  const size_t buckets = table.energies.size();
  std::vector<double> max_rate(buckets, 0.0);
  std::vector<double> rates;
  double p0 = 0.0;
  for (const auto& [x, p] : ch.rates()) {
    uint64_t b = v.bucket_index(x);
    max_rate[b] = std::max(max_rate[b], p);
    if (hamiltonian_form && x.is_identity()) {
      p0 = p;
    } else {
      rates.push_back(p);
    }
  }
  std::sort(rates.begin(), rates.end(), std::greater<>());
  std::vector<size_t> order;
  for (size_t b = hamiltonian_form ? 1 : 0; b < buckets; ++b) order.push_back(b);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return table.energies[a] > table.energies[b]; });
  HashingDiagnostics r;
  r.t = v.dim();
  r.s = s;
  for (size_t b : order) {
    r.sorted_energies.push_back(table.energies[b]);
    r.max_rates.push_back(max_rate[b]);
  }
  double top_buckets = 0.0, top_rates = 0.0;
  for (int64_t j = 0; j < s; ++j) {
    double e = static_cast<size_t>(j) < r.sorted_energies.size() ? r.sorted_energies[static_cast<size_t>(j)] : 0.0;
    double p = static_cast<size_t>(j) < rates.size() ? rates[static_cast<size_t>(j)] : 0.0;
    r.err.push_back(e - p);
    top_buckets += e;
    top_rates += p;
  }
  r.err_total = top_buckets - top_rates;
  if (hamiltonian_form) r.err_total += table.energies[0] - p0;
  r.gamma_minus_energy = r.err_total;
  return r;
}

}  // namespace hamprobe
