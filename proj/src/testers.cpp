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

#include "hamprobe/testers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "hamprobe/error.hpp"
#include "hamprobe/sampling.hpp"

namespace hamprobe {

Support weight_support(int k) {
  return {"weight<=" + std::to_string(k), [k](const PauliString& x) { return x.weight() <= k; }};
}

Support explicit_support(std::string name, const std::vector<PauliString>& strings) {
  auto set = std::make_shared<std::unordered_set<PauliString>>(strings.begin(), strings.end());
  return {std::move(name), [set](const PauliString& x) { return set->count(x) > 0; }};
}

double weight_outside(std::span<const double> probs, int n, const Support& s) {
  if (probs.size() != (size_t{1} << (2 * n))) throw DimensionError("weight_outside: need 4^n probabilities");
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] != 0.0 && !s.contains(PauliString::from_index(n, i))) acc += probs[i];
  }
  return acc;
}

namespace {

void check_gap(double eps1, double eps2) {
  if (!(eps1 >= 0) || !(eps1 < eps2) || !(eps2 <= 1)) throw ParameterError("need 0 <= eps1 < eps2 <= 1");
}

}  // namespace

std::vector<Decision> test_support(EvolutionOracle& oracle, const std::vector<Support>& supports, double eps1,
                                   double eps2, double delta, Rng& /*rng*/, const TesterConstants& c) {
  check_gap(eps1, eps2);
  if (supports.empty()) throw ParameterError("test_support: no supports given");
  if (!(delta > 0 && delta < 1)) throw ParameterError("test_support: delta must lie in (0, 1)");
  const int n = oracle.num_qubits();
  const double gap = eps2 - eps1;
  const double t = gap / (3.0 * c.taylor_c);
  const double m = static_cast<double>(supports.size());
  ShotBudget b = oracle.clamp(c.c_T * std::log(m / delta) / std::pow(gap, 4));
  const double phase1 = 0.75 * gap * gap;
  const double phase2 = gap * (eps1 + 2 * eps2) / (9 * c.taylor_c) - gap * gap / (18 * c.taylor_c);

  QueryLedger before = oracle.ledger();
  auto first = bell_distribution(oracle, t, b.shots);
  std::vector<double> second;  // drawn lazily, shared across supports
  std::vector<Decision> out;
  for (const auto& s : supports) {
    Decision d;
    d.protocol = "test_support:" + s.name;
    d.thresholds = {{"phase1_weight", phase1}, {"phase2_norm", phase2}};
    double alpha1 = weight_outside(first, n, s);
    if (alpha1 >= phase1) {
      d.verdict = Verdict::far;
      d.gamma = alpha1;
      d.thresholds["phase"] = 1;
    } else {
      if (second.empty()) second = bell_distribution(oracle, t, b.shots);
      double alpha2 = weight_outside(second, n, s);
      d.gamma = alpha2;
      d.verdict = std::sqrt(alpha2) >= phase2 ? Verdict::far : Verdict::close;
      d.thresholds["phase"] = 2;
    }
    d.seed = oracle.seed();
    d.budget_clamped = b.clamped;
    d.samples = b.shots;
    d.evolution_time = t;
    out.push_back(std::move(d));
  }
  QueryLedger used = oracle.ledger() - before;
  for (auto& d : out) d.ledger = used;
  return out;
}

Decision test_locality(EvolutionOracle& oracle, int k, double eps1, double eps2, double delta, Rng& rng,
                       const TesterConstants& c) {
  if (k < 0) throw ParameterError("test_locality: k must be non-negative");
  Decision d = test_support(oracle, {weight_support(k)}, eps1, eps2, delta, rng, c).front();
  d.protocol = "test_locality";
  return d;
}

Decision test_sparsity(EvolutionOracle& oracle, int64_t s, double eps1, double eps2, double delta, Rng& /*rng*/,
                       const TesterConstants& c) {
  check_gap(eps1, eps2);
  if (s < 1) throw ParameterError("test_sparsity: s must be positive");
  if (!(delta > 0 && delta < 1)) throw ParameterError("test_sparsity: delta must lie in (0, 1)");
  const int n = oracle.num_qubits();
  const double big_delta = eps2 * eps2 - eps1 * eps1;
  const double sd = static_cast<double>(s);
  const double t = c.c_t * big_delta / sd;
  ShotBudget b = oracle.clamp(c.c_T * std::pow(sd, 6) / std::pow(big_delta, 12) * std::log(1.0 / delta));
  QueryLedger before = oracle.ledger();
  auto dist = bell_distribution(oracle, t, b.shots);
  Decision d;
  d.protocol = "test_sparsity";
  d.gamma = top_energy(dist, n, s, t).value;
  const double t2 = t * t;
  d.thresholds = {{"accept", 1.0 - eps1 * eps1 * t2 - 0.5 * big_delta * t2}};
  d.verdict = d.gamma >= d.thresholds["accept"] ? Verdict::close : Verdict::far;
  d.ledger = oracle.ledger() - before;
  d.seed = oracle.seed();
  d.budget_clamped = b.clamped;
  d.samples = b.shots;
  d.evolution_time = t;
  return d;
}

double junta_best_weight(std::span<const double> probs, std::span<const PauliString> strings, int n, int k,
                         uint64_t* best_mask) {
  const uint64_t masks = uint64_t{1} << n;
  std::vector<double> w(masks, 0.0);
  if (strings.empty()) {
    if (probs.size() != (size_t{1} << (2 * n))) throw DimensionError("junta_best_weight: need 4^n probabilities");
    for (size_t i = 0; i < probs.size(); ++i) w[PauliString::from_index(n, i).support_mask()] += probs[i];
  } else {
    if (probs.size() != strings.size()) throw DimensionError("junta_best_weight: values and strings differ");
    for (size_t i = 0; i < probs.size(); ++i) w[strings[i].support_mask()] += probs[i];
  }
  // subset sums: w[K] <- sum over supports contained in K
  for (int q = 0; q < n; ++q) {
    for (uint64_t m = 0; m < masks; ++m) {
      if ((m >> q) & 1) w[m] += w[m ^ (uint64_t{1} << q)];
    }
  }
  const int size = std::min(k, n);
  double best = -1.0;
  uint64_t arg = 0;
  for (uint64_t m = 0; m < masks; ++m) {
    if (std::popcount(m) == size && w[m] > best) {
      best = w[m];
      arg = m;
    }
  }
  if (best_mask) *best_mask = arg;
  return best;
}

Decision test_junta(EvolutionOracle& oracle, int k, double eps1, double eps2, double delta, bool memory,
                    Rng& /*rng*/, const TesterConstants& c, double t) {
  if (k < 0) throw ParameterError("test_junta: k must be non-negative");
  if (!(eps1 >= 0) || !(2 * eps1 < eps2)) throw ParameterError("test_junta: need 0 <= 2 eps1 < eps2");
  if (!(delta > 0 && delta < 1)) throw ParameterError("test_junta: delta must lie in (0, 1)");
  const int n = oracle.num_qubits();
  const double eta = (eps2 * eps2 / 4 - eps1 * eps1) / (2.0 * std::pow(4.0, k));
  QueryLedger before = oracle.ledger();
  Decision d;
  d.protocol = memory ? "test_junta" : "test_junta_memoryless";
  uint64_t mask = 0;
  if (memory) {
    ShotBudget b = oracle.clamp(c.c_T * std::log(1.0 / delta) / (eta * eta));
    auto dist = bell_distribution(oracle, t, b.shots);
    d.gamma = junta_best_weight(dist, {}, n, k, &mask);
    d.budget_clamped = b.clamped;
    d.samples = b.shots;
  } else {
    std::vector<PauliString> strings;
    for_each_weight_at_most(n, k, [&](const PauliString& x) { strings.push_back(x); });
    auto est = memoryless_pauli_sampling(oracle, t, strings, eta, delta, 2.0 * c.c_T);
    d.gamma = junta_best_weight(est.values, strings, n, k, &mask);
    d.budget_clamped = est.clamped;
    d.samples = est.rounds;
  }
  d.thresholds = {{"accept", 1.0 - (eps1 * eps1 + eps2 * eps2 / 4) / 2}, {"eta", eta},
                  {"best_set_mask", static_cast<double>(mask)}};
  d.verdict = d.gamma >= d.thresholds["accept"] ? Verdict::close : Verdict::far;
  d.ledger = oracle.ledger() - before;
  d.seed = oracle.seed();
  d.evolution_time = t;
  return d;
}

}  // namespace hamprobe
