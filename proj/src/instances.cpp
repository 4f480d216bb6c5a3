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

#include "hamprobe/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "hamprobe/error.hpp"

namespace hamprobe {

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::k_local: return "k_local";
    case InstanceKind::s_sparse: return "s_sparse";
    case InstanceKind::k_local_s_sparse: return "k_local_s_sparse";
    case InstanceKind::close_to_k_local: return "close_to_k_local";
    case InstanceKind::far_from_k_local: return "far_from_k_local";
    case InstanceKind::close_to_s_sparse: return "close_to_s_sparse";
    case InstanceKind::far_from_s_sparse: return "far_from_s_sparse";
  }
  return "?";
}

InstanceKind parse_instance_kind(const std::string& name) {
  for (auto k : {InstanceKind::k_local, InstanceKind::s_sparse, InstanceKind::k_local_s_sparse,
                 InstanceKind::close_to_k_local, InstanceKind::far_from_k_local,
                 InstanceKind::close_to_s_sparse, InstanceKind::far_from_s_sparse}) {
    if (to_string(k) == name) return k;
  }
  throw ParameterError("unknown instance kind '" + name + "'");
}

namespace {

using Pred = std::function<bool(const PauliString&)>;

double random_coefficient(const InstanceParams& p, Rng& rng) {
  double mag = p.coef_lo + (p.coef_hi - p.coef_lo) * uniform01(rng);
  return (rng() & 1) ? mag : -mag;
}

Hamiltonian unit_combination(int n, const std::vector<PauliString>& strings, const InstanceParams& p,
                             Rng& rng, bool equal_magnitudes) {
  Hamiltonian h(n);
  for (const auto& x : strings) {
    double c = equal_magnitudes ? ((rng() & 1) ? 1.0 : -1.0) : random_coefficient(p, rng);
    h.set_term(x, c);
  }
  double norm = h.norm2();
  return norm > 0 ? h.scaled(1.0 / norm) : h;
}

Hamiltonian combine(const Hamiltonian& p, double a, const Hamiltonian& r, double b) {
  Hamiltonian h = p.scaled(a);
  for (const auto& [x, v] : r.terms()) h.add_term(x, b * v);
  double norm = operator_norm(h);
  return norm > 1.0 ? h.scaled(1.0 / norm) : h;
}

Hamiltonian normalize_if_needed(const Hamiltonian& h) {
  double norm = operator_norm(h);
  return norm > 1.0 ? h.scaled(1.0 / norm) : h;
}

// Smallest b on a geometric grid such that the structure distance reaches the
// target, trying progressively smaller structured weights.
Hamiltonian calibrate_far(const Hamiltonian& p, const Hamiltonian& r, double a0, double eps,
                          double margin, const std::function<double(const Hamiltonian&)>& distance,
                          const std::string& what) {
  const double target = eps + margin * (1.0 - eps);
  double best = 0.0;
  for (double a : {a0, a0 / 2, a0 / 4, a0 / 8, 0.0}) {
    for (int m = 0; m <= 60; ++m) {
      double b = std::max(eps, 1e-3) * std::pow(1.15, m);
      Hamiltonian h = combine(p, a, r, b);
      double d = distance(h);
      best = std::max(best, d);
      if (d >= target - 1e-12 && d >= eps) return h;
    }
  }
  throw GenerationError(what + ": requested distance " + std::to_string(eps) +
                        " exceeds the best reachable " + std::to_string(best));
}

}  // namespace

std::vector<PauliString> random_distinct_strings(int n, int count, const Pred& pred, Rng& rng) {
  std::vector<PauliString> pool;
  const uint64_t total = uint64_t{1} << (2 * n);
  for (uint64_t idx = 1; idx < total; ++idx) {
    PauliString x = PauliString::from_index(n, idx);
    if (pred(x)) pool.push_back(x);
  }
  if (static_cast<int>(pool.size()) < count) {
    throw GenerationError("only " + std::to_string(pool.size()) + " admissible strings, " +
                          std::to_string(count) + " requested");
  }
  // partial Fisher-Yates
  for (int i = 0; i < count; ++i) {
    size_t j = static_cast<size_t>(i) + uniform_below(rng, pool.size() - static_cast<size_t>(i));
    std::swap(pool[static_cast<size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<size_t>(count));
  return pool;
}

std::vector<PauliString> anticommuting_family(int n, Rng& rng) {
  std::vector<std::string> labels;
  for (int j = 0; j < n; ++j) {
    std::string base(static_cast<size_t>(n), 'I');
    for (int q = 0; q < j; ++q) base[static_cast<size_t>(q)] = 'Z';
    base[static_cast<size_t>(j)] = 'X';
    labels.push_back(base);
    base[static_cast<size_t>(j)] = 'Y';
    labels.push_back(base);
  }
  labels.emplace_back(static_cast<size_t>(n), 'Z');
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> relabel(static_cast<size_t>(n), "XYZ");
  for (auto& r : relabel) std::shuffle(r.begin(), r.end(), rng);
  std::vector<PauliString> out;
  for (const auto& l : labels) {
    std::string m(static_cast<size_t>(n), 'I');
    for (int q = 0; q < n; ++q) {
      char c = l[static_cast<size_t>(q)];
      if (c == 'I') continue;
      int letter = c == 'X' ? 0 : (c == 'Y' ? 1 : 2);
      m[static_cast<size_t>(perm[static_cast<size_t>(q)])] = relabel[static_cast<size_t>(q)][static_cast<size_t>(letter)];
    }
    out.push_back(PauliString::from_label(m));
  }
  return out;
}

Hamiltonian random_normalized_hamiltonian(int n, int terms, Rng& rng) {
  require_dense(n, "random_normalized_hamiltonian");
  std::normal_distribution<double> gauss;
  Hamiltonian h(n);
  const uint64_t total = uint64_t{1} << (2 * n);
  if (terms <= 0 || static_cast<uint64_t>(terms) >= total - 1) {
    for (uint64_t idx = 1; idx < total; ++idx) h.set_term(PauliString::from_index(n, idx), gauss(rng));
  } else {
    for (const auto& x : random_distinct_strings(n, terms, [](const PauliString&) { return true; }, rng)) {
      h.set_term(x, gauss(rng));
    }
  }
  double norm = operator_norm(h);
  return norm > 0 ? h.scaled(1.0 / norm) : h;
}

Hamiltonian generate_instance(InstanceKind kind, int n, const InstanceParams& p, Rng& rng) {
  if (n < 1) throw ParameterError("generate_instance: n must be positive");
  require_dense(n, "generate_instance");
  if (p.coef_lo < 0 || p.coef_hi < p.coef_lo) throw ParameterError("bad coefficient range");
  const int k = p.k;
  const Pred local = [k](const PauliString& x) { return x.weight() <= k; };
  const Pred nonlocal = [k](const PauliString& x) { return x.weight() > k; };
  const Pred any = [](const PauliString&) { return true; };
  const int default_local_terms = static_cast<int>(std::min<uint64_t>(count_weight_at_most(n, k) - 1, 2 * static_cast<uint64_t>(n)));
  const int residual = p.residual_terms > 0 ? p.residual_terms : 2 * n;

  switch (kind) {
    case InstanceKind::k_local: {
      int m = p.terms > 0 ? p.terms : default_local_terms;
      return normalize_if_needed(unit_combination(n, random_distinct_strings(n, m, local, rng), p, rng, false)
                                     .scaled(1.0));
    }
    case InstanceKind::s_sparse:
    case InstanceKind::k_local_s_sparse: {
      const Pred& pred = kind == InstanceKind::s_sparse ? any : local;
      int m = p.terms > 0 ? p.terms : static_cast<int>(p.s);
      Hamiltonian h(n);
      for (const auto& x : random_distinct_strings(n, m, pred, rng)) h.set_term(x, random_coefficient(p, rng));
      return normalize_if_needed(h);
    }
    case InstanceKind::close_to_k_local:
    case InstanceKind::close_to_s_sparse: {
      if (p.eps < 0) throw ParameterError("close instances need eps >= 0");
      bool loc = kind == InstanceKind::close_to_k_local;
      if (loc && k >= n) throw GenerationError("every Hamiltonian is n-local");
      int m = p.terms > 0 ? p.terms : (loc ? default_local_terms : static_cast<int>(p.s));
      auto structured = random_distinct_strings(n, m, loc ? local : any, rng);
      std::set<PauliString> used(structured.begin(), structured.end());
      Pred rest = [&](const PauliString& x) { return !used.count(x) && (loc ? nonlocal(x) : true); };
      Hamiltonian P = unit_combination(n, structured, p, rng, false);
      Hamiltonian R = unit_combination(n, random_distinct_strings(n, residual, rest, rng), p, rng, false);
      double b = p.eps * (0.5 + 0.5 * uniform01(rng));
      Hamiltonian h = combine(P, p.structured_weight, R, b);
      double d = loc ? distance_to_local(h, k) : distance_to_sparse(h, p.s);
      if (d > p.eps + 1e-12) throw GenerationError("close instance missed its distance bound");
      return h;
    }
    case InstanceKind::far_from_k_local: {
      if (k >= n) throw GenerationError("no Hamiltonian is far from n-local");
      std::vector<PauliString> fam;
      for (const auto& x : anticommuting_family(n, rng)) {
        if (x.weight() > k) fam.push_back(x);
      }
      if (fam.empty()) throw GenerationError("no non-local anticommuting strings available");
      int m = p.terms > 0 ? p.terms : default_local_terms;
      Hamiltonian P = unit_combination(n, random_distinct_strings(n, m, local, rng), p, rng, false);
      Hamiltonian R = unit_combination(n, fam, p, rng, false);
      return calibrate_far(P, R, p.structured_weight, p.eps, p.far_margin,
                           [k](const Hamiltonian& h) { return distance_to_local(h, k); }, "far_from_k_local");
    }
    case InstanceKind::far_from_s_sparse: {
      auto fam = anticommuting_family(n, rng);
      if (static_cast<int64_t>(fam.size()) <= p.s) throw GenerationError("sparsity too large for n");
      int m = p.terms > 0 ? p.terms : static_cast<int>(p.s);
      std::set<PauliString> famset(fam.begin(), fam.end());
      auto structured = random_distinct_strings(
          n, m, [&](const PauliString& x) { return !famset.count(x); }, rng);
      Hamiltonian P = unit_combination(n, structured, p, rng, false);
      Hamiltonian R = unit_combination(n, fam, p, rng, true);
      int64_t s = p.s;
      return calibrate_far(P, R, p.structured_weight, p.eps, p.far_margin,
                           [s](const Hamiltonian& h) { return distance_to_sparse(h, s); }, "far_from_s_sparse");
    }
  }
  throw ParameterError("unhandled instance kind");
}

}  // namespace hamprobe
