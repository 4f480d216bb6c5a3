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

#include "hamprobe/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "hamprobe/error.hpp"
#include "hamprobe/instances.hpp"
#include "hamprobe/sampling.hpp"
#include "hamprobe/walsh.hpp"

namespace hamprobe {

PauliChannel::PauliChannel(int n, std::map<PauliString, double> rates, double tol)
    : n_(n), rates_(std::move(rates)) {
  double total = 0.0;
  for (auto it = rates_.begin(); it != rates_.end();) {
    if (it->first.num_qubits() != n) throw DimensionError("channel rate on wrong qubit count");
    if (!std::isfinite(it->second) || it->second < -tol) {
      throw ValidationError("invalid rate for " + it->first.label());
    }
    total += it->second;
    if (it->second <= 0.0) {
      it = rates_.erase(it);
    } else {
      ++it;
    }
  }
  if (std::abs(total - 1.0) > tol) {
    throw ValidationError("channel rates sum to " + std::to_string(total) + ", not 1");
  }
}

PauliChannel PauliChannel::from_dense(int n, std::span<const double> rates, double tol) {
  if (rates.size() != (size_t{1} << (2 * n))) throw DimensionError("from_dense: need 4^n rates");
  std::map<PauliString, double> m;
  for (size_t i = 0; i < rates.size(); ++i) {
    if (rates[i] != 0.0) m[PauliString::from_index(n, i)] = rates[i];
  }
  return PauliChannel(n, std::move(m), tol);
}

double PauliChannel::rate(const PauliString& x) const {
  auto it = rates_.find(x);
  return it == rates_.end() ? 0.0 : it->second;
}

std::vector<double> PauliChannel::dense_rates() const {
  std::vector<double> out(size_t{1} << (2 * n_), 0.0);
  for (const auto& [x, p] : rates_) out[x.index()] = p;
  return out;
}

double pauli_fidelity(const PauliChannel& ch, const PauliString& y) {
  double acc = 0.0;
  for (const auto& [x, p] : ch.rates()) acc += symplectic_inner(x, y) ? -p : p;
  return acc;
}

std::vector<double> pauli_fidelities(const PauliChannel& ch) {
  auto p = ch.dense_rates();
  return symplectic_character_sum(p, ch.num_qubits());
}

std::vector<double> rates_from_fidelities(std::span<const double> fidelities, int n) {
  return symplectic_fourier(fidelities, n);
}

double channel_energy(const PauliChannel& ch, int64_t s) {
  std::vector<double> v;
  for (const auto& [x, p] : ch.rates()) v.push_back(p);
  std::sort(v.begin(), v.end(), std::greater<>());
  double e = 0.0;
  for (size_t i = 0; i < v.size() && static_cast<int64_t>(i) < s; ++i) e += v[i];
  return e;
}

double distance_to_sparse_channel(const PauliChannel& ch, int64_t s) {
  return std::max(0.0, 1.0 - channel_energy(ch, s));
}

double channel_distance(const PauliChannel& a, const PauliChannel& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("channel_distance: qubit counts differ");
  double acc = 0.0;
  for (const auto& [x, p] : a.rates()) acc += std::abs(p - b.rate(x));
  for (const auto& [x, q] : b.rates()) {
    if (a.rate(x) == 0.0) acc += q;
  }
  return 0.5 * acc;
}

PauliChannel twirled_channel(const UnitarySpectrum& spec) {
  auto p = spec.probabilities();
  return PauliChannel::from_dense(spec.num_qubits(), p, 1e-8);
}

PauliChannel twirled_channel_from_evolution(const Hamiltonian& h, double t) {
  return twirled_channel(evolution_spectrum(h, t));
}

ChannelOracle::ChannelOracle(PauliChannel channel, uint64_t seed, OracleOptions options)
    : channel_(std::move(channel)), seed_(seed), options_(options), rng_(seed) {}

ShotBudget ChannelOracle::clamp(double requested) const {
  uint64_t want = std::max<uint64_t>(1, ceil_count(requested));
  if (want > options_.max_shots) return {options_.max_shots, true};
  return {want, false};
}

double ChannelOracle::fidelity_shot(const PauliString& z, uint64_t shots) {
  double lambda = pauli_fidelity(channel_, z);
  ledger_.queries += shots;
  if (exact() || shots == 0) return lambda;
  double p = std::clamp((1.0 + lambda) / 2.0, 0.0, 1.0);
  uint64_t k = binomial(rng_, shots, p);
  return 2.0 * static_cast<double>(k) / static_cast<double>(shots) - 1.0;
}

LoadedChannel parse_channel_text(std::istream& in) {
  Hamiltonian parsed = parse_hamiltonian_text(in);
  double total = 0.0;
  for (const auto& [x, p] : parsed.terms()) {
    if (p < 0) throw ValidationError("negative rate for " + x.label());
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw ValidationError("channel rates sum to " + std::to_string(total) + ", outside 1e-6 of 1");
  }
  std::map<PauliString, double> rates;
  for (const auto& [x, p] : parsed.terms()) rates[x] = p / total;
  return {PauliChannel(parsed.num_qubits(), std::move(rates), 1e-9), total != 1.0};
}

LoadedChannel load_channel(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  return parse_channel_text(f);
}

std::string format_channel_text(const PauliChannel& ch) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const auto& [x, p] : ch.rates()) os << x.label() << ' ' << p << '\n';
  return os.str();
}

namespace {

std::vector<double> random_weights(size_t m, Rng& rng) {
  std::vector<double> w(m);
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - uniform01(rng));  // Dirichlet(1,...,1)
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

}  // namespace

PauliChannel generate_channel(ChannelKind kind, int n, int64_t s, double eps, Rng& rng) {
  const uint64_t total = uint64_t{1} << (2 * n);
  if (s < 1 || static_cast<uint64_t>(s) > total) throw ParameterError("generate_channel: bad sparsity");
  std::vector<double> p(total, 0.0);
  switch (kind) {
    case ChannelKind::depolarizing: {
      if (eps < 0 || eps > 1) throw ParameterError("depolarizing strength outside [0, 1]");
      p[0] = 1.0 - eps;
      for (uint64_t i = 1; i < total; ++i) p[i] = eps / static_cast<double>(total - 1);
      break;
    }
    case ChannelKind::close_to_sparse: {
      auto pick = random_distinct_strings(n, static_cast<int>(std::min<uint64_t>(total - 1, s + 2 * n)),
                                          [](const PauliString&) { return true; }, rng);
      auto top = random_weights(static_cast<size_t>(s), rng);
      double eta = eps * uniform01(rng);
      // planted mass on 0 and s-1 random strings, eta spread over the others
      std::vector<PauliString> planted{PauliString(n)};
      for (int64_t i = 0; i + 1 < s; ++i) planted.push_back(pick[static_cast<size_t>(i)]);
      for (size_t i = 0; i < planted.size(); ++i) p[planted[i].index()] += (1.0 - eta) * top[i];
      size_t rest = pick.size() - (planted.size() - 1);
      if (rest == 0) {
        p[0] += eta;
      } else {
        auto w = random_weights(rest, rng);
        for (size_t i = 0; i < rest; ++i) p[pick[planted.size() - 1 + i].index()] += eta * w[i];
      }
      break;
    }
    case ChannelKind::far_from_sparse: {
      // spread over m strings; mixing with the uniform spread raises the distance
      // towards 1 - s/m
      uint64_t m = std::min<uint64_t>(total, static_cast<uint64_t>(std::ceil(2.0 * static_cast<double>(s) / std::max(1e-9, 1.0 - eps))) + 1);
      if (1.0 - static_cast<double>(s) / static_cast<double>(m) < eps) {
        throw GenerationError("far channel: eps too large for n and s");
      }
      std::vector<PauliString> support{PauliString(n)};
      for (const auto& x : random_distinct_strings(n, static_cast<int>(m - 1), [](const PauliString&) { return true; }, rng)) {
        support.push_back(x);
      }
      auto w = random_weights(m, rng);
      std::vector<double> q(total, 0.0);
      for (double mix = 0.0;; mix = std::min(1.0, mix + 0.05)) {
        std::fill(q.begin(), q.end(), 0.0);
        for (size_t i = 0; i < m; ++i) q[support[i].index()] = (1.0 - mix) * w[i] + mix / static_cast<double>(m);
        PauliChannel ch = PauliChannel::from_dense(n, q);
        if (distance_to_sparse_channel(ch, s) >= eps) return ch;
        if (mix >= 1.0) throw GenerationError("far channel: could not reach eps");
      }
    }
  }
  return PauliChannel::from_dense(n, p, 1e-9);
}

}  // namespace hamprobe
