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

#include "hamprobe/lemmas.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "hamprobe/channel.hpp"
#include "hamprobe/dense.hpp"
#include "hamprobe/error.hpp"
#include "hamprobe/evolution.hpp"
#include "hamprobe/hashing.hpp"
#include "hamprobe/instances.hpp"
#include "hamprobe/mub.hpp"
#include "hamprobe/subgroup.hpp"

namespace hamprobe {

namespace {

class Checker {
 public:
  explicit Checker(SuiteReport& r) : r_(r) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.checks;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.first_violation = describe();
    }
  }

 private:
  SuiteReport& r_;
};

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  os.precision(12);
  (os << ... << args);
  return os.str();
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

PauliChannel random_channel(int n, Rng& rng) {
  std::exponential_distribution<double> ex;
  const uint64_t total = uint64_t{1} << (2 * n);
  std::vector<double> p(total);
  for (auto& v : p) v = std::pow(ex(rng), 3.0);
  double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& v : p) v /= sum;
  return PauliChannel::from_dense(n, p);
}

double weight_above(const std::vector<double>& probs, int n, int k) {
  double w = 0.0;
  for (uint64_t i = 0; i < probs.size(); ++i) {
    if (PauliString::from_index(n, i).weight() > k) w += probs[i];
  }
  return w;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double x = std::log(xs[i]), y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// --- suites -------------------------------------------------------------------

void taylor(Checker& c, SuiteReport& r, Rng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 4;
    Hamiltonian h = random_normalized_hamiltonian(n, 0, rng);
    Propagator prop(h);
    Eigen::MatrixXcd hm = synthesize(h);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(hm.rows(), hm.cols());
    for (double t : {0.5, 0.25, 0.1}) {
      double rem = spectral_norm(prop.unitary(t) - id + cplx(0, t) * hm);
      worst = std::max(worst, rem / (t * t));
      c.check(rem <= t * t + 1e-12, [&] { return cat("||U(t) - I + itH|| = ", rem, " > t^2 at t = ", t, ", n = ", n); });
    }
  }
  r.metrics["worst_ratio_to_t2"] = worst;

  // second order: U_0(t) = 1 - (t^2/2) sum lambda^2 + O(t^3)
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 3;
    Hamiltonian h = random_normalized_hamiltonian(n, 0, rng);
    Propagator prop(h);
    const double sq = h.norm2() * h.norm2();
    auto err = [&](double t) {
      cplx u0 = prop.spectrum(t).coefficient(PauliString(n));
      return std::abs(u0 - cplx(1.0 - 0.5 * t * t * sq, 0.0));
    };
    double e1 = err(0.1), e2 = err(0.05);
    c.check(e1 < 1e-13 || e2 <= e1 / 6.0,
            [&] { return cat("second-order remainder does not shrink cubically: ", e1, " -> ", e2); });
  }
}

void locality_dichotomy(Checker& c, SuiteReport& r, Rng& rng) {
  struct Cell {
    int k;
    double e1, e2;
  };
  const int n = 4;
  const std::vector<Cell> cells = {{1, 0.05, 0.4}, {1, 0.1, 0.5}, {2, 0.05, 0.6}, {2, 0.2, 0.7}};
  double close_margin = 1e9, far_margin = 1e9;
  int close_count = 0, far_count = 0;
  for (const auto& cell : cells) {
    const double gap = cell.e2 - cell.e1;
    const double alpha = gap / 3.0;
    const double upper = gap * (2 * cell.e1 + cell.e2) / 9.0;
    const double lower = gap * (cell.e1 + 2 * cell.e2) / 9.0;
    for (int i = 0; i < 25; ++i) {
      InstanceParams p;
      p.k = cell.k;
      p.eps = cell.e1;
      Hamiltonian h = generate_instance(InstanceKind::close_to_k_local, n, p, rng);
      double w = std::sqrt(weight_above(evolution_spectrum(h, alpha).probabilities(), n, cell.k));
      close_margin = std::min(close_margin, upper - w);
      ++close_count;
      c.check(w <= upper + 1e-12, [&] { return cat("close instance: ||U_{>k}|| = ", w, " > ", upper); });

      p.eps = cell.e2;
      Hamiltonian g = generate_instance(InstanceKind::far_from_k_local, n, p, rng);
      double v = std::sqrt(weight_above(evolution_spectrum(g, alpha).probabilities(), n, cell.k));
      far_margin = std::min(far_margin, v - lower);
      ++far_count;
      c.check(v >= lower - 1e-12, [&] { return cat("far instance: ||U_{>k}|| = ", v, " < ", lower); });
    }
  }
  r.metrics["close_instances"] = close_count;
  r.metrics["far_instances"] = far_count;
  r.metrics["close_min_margin"] = close_margin;
  r.metrics["far_min_margin"] = far_margin;
}

void sparsity_dichotomy(Checker& c, SuiteReport& r, Rng& rng) {
  const int n = 3;
  const int64_t s = 2;
  const double e1 = 0.1, e2 = 0.6;
  const std::vector<double> ts = {0.1, 0.05, 0.025};
  std::vector<Propagator> close, far;
  for (int i = 0; i < 20; ++i) {
    InstanceParams p;
    p.s = s;
    p.eps = e1;
    close.emplace_back(generate_instance(InstanceKind::close_to_s_sparse, n, p, rng));
    p.eps = e2;
    far.emplace_back(generate_instance(InstanceKind::far_from_s_sparse, n, p, rng));
  }
  std::vector<double> gaps;
  // residual constant C in TopEnergy >= 1 - e1^2 t^2 - C s t^3 (close) and
  // TopEnergy <= 1 - e2^2 t^2 + C s t^3 (far), fitted at the largest t
  double fitted_c = 0.0;
  for (size_t ti = 0; ti < ts.size(); ++ti) {
    const double t = ts[ti];
    const double slack = fitted_c * static_cast<double>(s) * t * t * t;
    double mc = 0.0, mf = 0.0;
    for (auto& pr : close) {
      double te = top_energy(pr.spectrum(t), s).value;
      mc += te;
      double need = (1.0 - e1 * e1 * t * t - te) / (static_cast<double>(s) * t * t * t);
      if (ti == 0) fitted_c = std::max(fitted_c, need);
      else c.check(te >= 1.0 - e1 * e1 * t * t - slack - 1e-14,
                   [&] { return cat("close TopEnergy ", te, " below 1 - e1^2 t^2 - C s t^3 at t = ", t); });
    }
    for (auto& pr : far) {
      double te = top_energy(pr.spectrum(t), s).value;
      mf += te;
      double need = (te - 1.0 + e2 * e2 * t * t) / (static_cast<double>(s) * t * t * t);
      if (ti == 0) fitted_c = std::max(fitted_c, need);
      else c.check(te <= 1.0 - e2 * e2 * t * t + slack + 1e-14,
                   [&] { return cat("far TopEnergy ", te, " above 1 - e2^2 t^2 + C s t^3 at t = ", t); });
    }
    double gap = (mc - mf) / static_cast<double>(close.size());
    c.check(gap > 0, [&] { return cat("no TopEnergy gap at t = ", t); });
    gaps.push_back(std::max(gap, 1e-300));
  }
  double slope = loglog_slope(ts, gaps);
  r.metrics["gap_slope"] = slope;
  r.metrics["fitted_C"] = fitted_c;
  c.check(std::abs(slope - 2.0) <= 0.15 * 2.0, [&] { return cat("TopEnergy gap slope ", slope, " not within 15% of 2"); });
}

void mub_design(Checker& c, SuiteReport& r, Rng& rng) {
  double worst_design = 0.0;
  for (int n : {1, 2}) {
    MubFamily m(n);
    const auto N = static_cast<Eigen::Index>(m.dimension());
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(N * N, N * N);
    for (uint64_t i = 0; i < m.num_bases(); ++i) {
      for (uint64_t j = 0; j < m.dimension(); ++j) {
        Eigen::MatrixXcd p = m.projector(i, j);
        acc += kron(p, p);
      }
    }
    const double norm = static_cast<double>(N * (N + 1));
    acc /= norm;
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(N * N, N * N);
    for (Eigen::Index a = 0; a < N; ++a)
      for (Eigen::Index b = 0; b < N; ++b) target(a * N + b, b * N + a) += 1.0;
    target /= norm;
    double dev = (acc - target).cwiseAbs().maxCoeff();
    worst_design = std::max(worst_design, dev);
    c.check(dev <= 1e-10, [&] { return cat("2-design identity off by ", dev, " at n = ", n); });
  }
  r.metrics["design_max_dev"] = worst_design;

  for (int n : {1, 2, 3}) {
    MubFamily m(n);
    const uint64_t N = m.dimension();
    std::vector<Eigen::MatrixXcd> bases;
    std::vector<std::set<uint64_t>> subspaces;
    for (uint64_t i = 0; i < m.num_bases(); ++i) {
      bases.push_back(m.basis_matrix(i));
      std::set<uint64_t> sub;
      for (const auto& y : m.subspace(i)) {
        sub.insert(y.index());
        for (const auto& g : m.generators(i)) {
          c.check(commutes(y, g), [&] { return cat("subspace ", i, " is not isotropic at n = ", n); });
        }
      }
      c.check(sub.size() == N, [&] { return cat("subspace ", i, " has ", sub.size(), " elements"); });
      subspaces.push_back(sub);
    }
    for (uint64_t i = 0; i < m.num_bases(); ++i) {
      for (uint64_t i2 = i + 1; i2 < m.num_bases(); ++i2) {
        std::vector<uint64_t> common;
        std::set_intersection(subspaces[i].begin(), subspaces[i].end(), subspaces[i2].begin(), subspaces[i2].end(),
                              std::back_inserter(common));
        c.check(common.size() == 1, [&] { return cat("subspaces ", i, ", ", i2, " share a nonzero string"); });
      }
    }
    for (uint64_t i = 0; i < m.num_bases(); ++i) {
      for (uint64_t i2 = i; i2 < m.num_bases(); ++i2) {
        Eigen::MatrixXd ov = (bases[i].adjoint() * bases[i2]).cwiseAbs2();
        for (uint64_t a = 0; a < N; ++a) {
          for (uint64_t b = 0; b < N; ++b) {
            double want = i == i2 ? (a == b ? 1.0 : 0.0) : 1.0 / static_cast<double>(N);
            double got = ov(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            c.check(std::abs(got - want) <= 1e-10,
                    [&] { return cat("overlap of (", i, ",", a, ") and (", i2, ",", b, ") is ", got); });
          }
        }
      }
    }
    if (n > 2) continue;
    for (uint64_t i = 0; i < m.num_bases(); ++i) {
      for (uint64_t j = 0; j < N; ++j) {
        Eigen::VectorXcd phi = bases[i].col(static_cast<Eigen::Index>(j));
        double dev = (phi * phi.adjoint() - m.projector(i, j)).cwiseAbs().maxCoeff();
        c.check(dev <= 1e-10, [&] { return cat("projector expansion of (", i, ",", j, ") off by ", dev); });
        for (uint64_t idx = 0; idx < (uint64_t{1} << (2 * n)); ++idx) {
          PauliString x = PauliString::from_index(n, idx);
          uint64_t l = m.shift_index(i, j, x);
          double amp = std::abs(bases[i].col(static_cast<Eigen::Index>(l)).dot(apply_pauli(x, phi)));
          c.check(std::abs(amp - 1.0) <= 1e-10, [&] { return cat("shift index fails for x = ", x.label()); });
        }
      }
    }
  }

  // expectation identity of memory-less sampling
  double worst_hit = 0.0;
  for (int n : {1, 2}) {
    const double N = std::ldexp(1.0, n);
    for (int trial = 0; trial < 5; ++trial) {
      Hamiltonian h = random_normalized_hamiltonian(n, 0, rng);
      EvolutionOracle o(h, 1, {OracleMode::exact});
      const double t = 0.3 + 0.4 * trial;
      const auto probs = o.spectrum(t).probabilities();
      for (uint64_t idx = 0; idx < probs.size(); ++idx) {
        PauliString x = PauliString::from_index(n, idx);
        double hit = memoryless_hit_rate(o, t, x);
        double want = 1.0 / (N + 1.0) + N * probs[idx] / (N + 1.0);
        worst_hit = std::max(worst_hit, std::abs(hit - want));
        c.check(std::abs(hit - want) <= 1e-9, [&] { return cat("hit rate ", hit, " != ", want, " for ", x.label()); });
      }
    }
  }
  r.metrics["hit_rate_max_dev"] = worst_hit;
}

void hashing_props(Checker& c, SuiteReport& r, Rng& rng) {
  // sum over a subspace is the indicator of the complement, all subspaces of F_2^4
  for (int t = 0; t <= 4; ++t) {
    for (const auto& basis : enumerate_subspaces(4, t)) {
      std::vector<PauliString> gens;
      for (uint64_t g : basis) gens.push_back(PauliString::from_index(2, g));
      SymplecticSubgroup v(2, gens);
      auto elems = v.elements();
      for (uint64_t ai = 0; ai < 16; ++ai) {
        PauliString a = PauliString::from_index(2, ai);
        double avg = 0.0;
        for (const auto& x : elems) avg += symplectic_inner(a, x) ? -1.0 : 1.0;
        avg /= static_cast<double>(elems.size());
        double want = v.in_complement(a) ? 1.0 : 0.0;
        c.check(std::abs(avg - want) < 1e-12, [&] { return cat("subspace average ", avg, " for a = ", a.label()); });
      }
    }
  }
  // homomorphism and partition
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4;
    SymplecticSubgroup v = random_subgroup(n, 1 + trial % 6, rng);
    PauliString x = PauliString::from_index(n, uniform_bits(rng, 2 * n));
    PauliString y = PauliString::from_index(n, uniform_bits(rng, 2 * n));
    c.check(v.bucket_index(x ^ y) == (v.bucket_index(x) ^ v.bucket_index(y)),
            [&] { return cat("bucket_index is not additive on ", x.label(), ", ", y.label()); });
  }
  for (int t = 0; t <= 6; ++t) {
    const int n = 3;
    SymplecticSubgroup v = random_subgroup(n, t, rng);
    std::vector<uint64_t> sizes(uint64_t{1} << t, 0);
    std::vector<uint64_t> min_key(sizes.size(), UINT64_MAX);
    for (uint64_t idx = 0; idx < 64; ++idx) {
      PauliString x = PauliString::from_index(n, idx);
      uint64_t b = v.bucket_index(x);
      ++sizes[b];
      min_key[b] = std::min(min_key[b], x.key());
    }
    for (uint64_t b = 0; b < sizes.size(); ++b) {
      c.check(sizes[b] == (uint64_t{1} << (6 - t)), [&] { return cat("bucket ", b, " has ", sizes[b], " strings"); });
      PauliString rep = v.coset_representative(b);
      c.check(v.bucket_index(rep) == b && rep.key() == min_key[b],
              [&] { return cat("coset representative of bucket ", b, " is not its smallest member"); });
    }
  }
  // hashing frequencies, n = 4, t = 3
  {
    const int n = 4, t = 3, draws = 10000;
    const PauliString a = PauliString::from_label("XYZI");
    const PauliString a2 = PauliString::from_label("ZZIY");
    const uint64_t b = 5, b2 = 2;
    int hit = 0, coll = 0, joint = 0;
    for (int d = 0; d < draws; ++d) {
      SymplecticSubgroup v = random_subgroup(n, t, rng);
      uint64_t ba = v.bucket_index(a), ba2 = v.bucket_index(a2);
      hit += ba == b;
      coll += ba == ba2;
      joint += ba == b && ba2 == b2;
    }
    auto within = [&](int count, double p, const char* what) {
      double f = count / static_cast<double>(draws);
      double sigma = std::sqrt(p * (1 - p) / draws);
      r.metrics[std::string(what) + "_z"] = (f - p) / sigma;
      c.check(std::abs(f - p) <= 3 * sigma, [&] { return cat(what, " frequency ", f, " vs ", p, " beyond 3 sigma"); });
    };
    within(hit, 1.0 / 8, "bucket");
    within(coll, 1.0 / 8, "collision");
    within(joint, 1.0 / 64, "joint");
  }
  // collision errors against sqrt(2s/2^t)
  {
    const int n = 3;
    const int64_t s = 2;
    std::vector<PauliChannel> channels = {generate_channel(ChannelKind::close_to_sparse, n, s, 0.2, rng),
                                          generate_channel(ChannelKind::far_from_sparse, n, s, 0.5, rng),
                                          generate_channel(ChannelKind::depolarizing, n, s, 0.3, rng),
                                          random_channel(n, rng)};
    double worst_ratio = 0.0;
    for (const auto& ch : channels) {
      for (int t : {2, 3, 4, 5}) {
        double sum = 0.0;
        const int draws = 1000;
        for (int d = 0; d < draws; ++d) {
          auto diag = hashing_diagnostics(ch, random_subgroup(n, t, rng), s);
          c.check(diag.err_total >= -1e-12, [&] { return cat("negative hashing error ", diag.err_total); });
          sum += diag.err_total;
        }
        double mean = sum / draws;
        double bound = std::sqrt(2.0 * static_cast<double>(s) / std::ldexp(1.0, t));
        worst_ratio = std::max(worst_ratio, mean / bound);
        c.check(mean <= bound, [&] { return cat("mean collision error ", mean, " exceeds ", bound, " at t = ", t); });
      }
    }
    r.metrics["collision_mean_over_bound"] = worst_ratio;
  }
}

void bucket_energy(Checker& c, SuiteReport& r, Rng& rng) {
  {
    PauliChannel ch(1, {{PauliString::from_label("I"), 0.7}, {PauliString::from_label("X"), 0.1},
                        {PauliString::from_label("Y"), 0.1}, {PauliString::from_label("Z"), 0.1}});
    SymplecticSubgroup v(1, {PauliString::from_label("Z")});
    auto e = bucket_energies_exact(ch, v).energies;
    c.check(std::abs(e[0] - 0.8) < 1e-12 && std::abs(e[1] - 0.2) < 1e-12,
            [&] { return cat("single-qubit bucket energies ", e[0], ", ", e[1]); });
  }
  uint64_t subgroups = 0;
  double worst = 0.0;
  for (int n : {1, 2, 3}) {
    std::vector<PauliChannel> channels = {random_channel(n, rng), random_channel(n, rng)};
    for (int t = 0; t <= 2 * n; ++t) {
      for (const auto& basis : enumerate_subspaces(2 * n, t)) {
        std::vector<PauliString> gens;
        for (uint64_t g : basis) gens.push_back(PauliString::from_index(n, g));
        SymplecticSubgroup v(n, gens);
        ++subgroups;
        for (const auto& ch : channels) {
          auto a = bucket_energies_exact(ch, v).energies;
          auto b = bucket_energies_coset_sum(ch, v).energies;
          double total = std::accumulate(a.begin(), a.end(), 0.0);
          c.check(std::abs(total - 1.0) <= 1e-9, [&] { return cat("bucket energies sum to ", total); });
          for (size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst, std::abs(a[i] - b[i]));
            c.check(std::abs(a[i] - b[i]) <= 1e-9,
                    [&] { return cat("fidelity-sum ", a[i], " != coset-sum ", b[i], " (n = ", n, ", t = ", t, ")"); });
          }
        }
      }
    }
  }
  r.metrics["subgroups"] = static_cast<double>(subgroups);
  r.metrics["max_dev"] = worst;
}

void twirl_identity(Checker& c, SuiteReport& r, Rng& rng) {
  double worst_map = 0.0;
  for (int n : {1, 2}) {
    const uint64_t total = uint64_t{1} << (2 * n);
    const auto N = static_cast<Eigen::Index>(1) << n;
    for (int trial = 0; trial < 5; ++trial) {
      Hamiltonian h = random_normalized_hamiltonian(n, 0, rng);
      for (double t : {0.3, 1.1}) {
        auto spec = evolution_spectrum(h, t);
        PauliChannel ch = twirled_channel_from_evolution(h, t);
        auto rates = ch.dense_rates();
        auto probs = spec.probabilities();
        for (uint64_t i = 0; i < total; ++i) {
          c.check(std::abs(rates[i] - probs[i]) <= 1e-9, [&] { return cat("twirled rate differs from |U_x|^2"); });
        }
        Eigen::MatrixXcd u = evolution_unitary(h, t);
        for (Eigen::Index k = 0; k < N; ++k) {
          for (Eigen::Index l = 0; l < N; ++l) {
            Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(N, N);
            e(k, l) = 1.0;
            Eigen::MatrixXcd twirl = Eigen::MatrixXcd::Zero(N, N);
            Eigen::MatrixXcd pauli_map = Eigen::MatrixXcd::Zero(N, N);
            for (uint64_t a = 0; a < total; ++a) {
              Eigen::MatrixXcd s = pauli_matrix(PauliString::from_index(n, a));
              twirl += s * u * s * e * s * u.adjoint() * s;
              pauli_map += rates[a] * s * e * s;
            }
            twirl /= static_cast<double>(total);
            double dev = (twirl - pauli_map).cwiseAbs().maxCoeff();
            worst_map = std::max(worst_map, dev);
            c.check(dev <= 1e-8, [&] { return cat("twirled map differs by ", dev, " on E_", k, l); });
          }
        }
      }
    }
  }
  r.metrics["twirl_map_max_dev"] = worst_map;

  double worst_bridge = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    const int64_t s = 1 + trial % 3;
    Hamiltonian h = random_normalized_hamiltonian(n, 4, rng);
    EvolutionOracle o(h, static_cast<uint64_t>(trial), {OracleMode::exact});
    Rng local(static_cast<uint64_t>(trial));
    Decision d = test_hamiltonian_sparsity_memoryless(o, s, 0.05, 0.9, 0.1, local);
    double te = top_energy(o.spectrum(d.evolution_time), s).value;
    worst_bridge = std::max(worst_bridge, std::abs(d.gamma - te));
    c.check(std::abs(d.gamma - te) <= 1e-9, [&] { return cat("bridge Gamma ", d.gamma, " != TopEnergy ", te); });
  }
  r.metrics["bridge_max_dev"] = worst_bridge;
}

void channel_dichotomy(Checker& c, SuiteReport& r, Rng& rng) {
  {
    PauliChannel ch(1, {{PauliString::from_label("I"), 0.9}, {PauliString::from_label("X"), 0.1}});
    double d = distance_to_sparse_channel(ch, 1);
    c.check(std::abs(d - 0.1) < 1e-12, [&] { return cat("distance of the two-point channel is ", d); });
  }
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 2;
    const int64_t s = 1 + trial % 3;
    PauliChannel ch = random_channel(n, rng);
    auto p = ch.dense_rates();
    const size_t total = p.size();
    // brute force over supports T with |T| = s
    double best = 1.0;
    std::vector<bool> pick(total, false);
    std::fill(pick.end() - s, pick.end(), true);
    do {
      double in = 0.0;
      std::map<PauliString, double> q;
      for (size_t i = 0; i < total; ++i) {
        if (pick[i]) in += p[i];
      }
      for (size_t i = 0; i < total; ++i) {
        if (!pick[i]) continue;
        double v = in > 0 ? p[i] / in : 1.0 / static_cast<double>(s);
        if (v > 0) q[PauliString::from_index(n, i)] = v;
      }
      double achieved = channel_distance(ch, PauliChannel(n, q, 1e-9));
      c.check(std::abs(achieved - (1.0 - in)) <= 1e-9 || in == 0.0,
              [&] { return cat("renormalized channel on T has distance ", achieved, ", expected ", 1.0 - in); });
      // no other channel on T does better
      for (int probe = 0; probe < 3; ++probe) {
        std::map<PauliString, double> rq;
        double sum = 0.0;
        std::vector<std::pair<size_t, double>> draw;
        for (size_t i = 0; i < total; ++i) {
          if (pick[i]) draw.emplace_back(i, uniform01(rng) + 1e-3);
        }
        for (auto& [i, v] : draw) sum += v;
        for (auto& [i, v] : draw) rq[PauliString::from_index(n, i)] = v / sum;
        double dq = channel_distance(ch, PauliChannel(n, rq, 1e-9));
        c.check(dq >= 1.0 - in - 1e-12, [&] { return cat("a channel on T beats the renormalized optimum"); });
      }
      best = std::min(best, 1.0 - in);
    } while (std::next_permutation(pick.begin(), pick.end()));
    double d = distance_to_sparse_channel(ch, s);
    c.check(std::abs(d - best) <= 1e-12, [&] { return cat("closed-form distance ", d, " != brute force ", best); });
    double energy = channel_energy(ch, s);
    // every eps1 >= d certifies closeness, every eps2 <= d certifies farness
    for (double e1 : {d, d + 0.05, d + 0.2}) {
      c.check(energy >= 1.0 - 2.0 * e1 - 1e-12, [&] { return cat("Energy ", energy, " < 1 - 2 eps1 for eps1 = ", e1); });
    }
    for (double e2 : {d, 0.5 * d, 0.1 * d}) {
      c.check(energy <= 1.0 - e2 + 1e-12, [&] { return cat("Energy ", energy, " > 1 - eps2 for eps2 = ", e2); });
    }
  }
  r.metrics["trials"] = 60;
}

using SuiteFn = void (*)(Checker&, SuiteReport&, Rng&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"taylor", taylor},
      {"locality_dichotomy", locality_dichotomy},
      {"sparsity_dichotomy", sparsity_dichotomy},
      {"mub_design", mub_design},
      {"hashing_props", hashing_props},
      {"bucket_energy", bucket_energy},
      {"twirl_identity", twirl_identity},
      {"channel_dichotomy", channel_dichotomy},
  };
  return table;
}

void enumerate_rows(int m, int t, int below, std::vector<int>& pivots, std::vector<std::vector<uint64_t>>& out) {
  if (static_cast<int>(pivots.size()) == t) {
    // free bits: non-pivot positions below each pivot
    std::vector<std::vector<int>> free(static_cast<size_t>(t));
    for (int r = 0; r < t; ++r) {
      for (int b = 0; b < pivots[static_cast<size_t>(r)]; ++b) {
        if (std::find(pivots.begin(), pivots.end(), b) == pivots.end()) free[static_cast<size_t>(r)].push_back(b);
      }
    }
    size_t total_free = 0;
    for (const auto& f : free) total_free += f.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << total_free); ++mask) {
      std::vector<uint64_t> rows;
      size_t bit = 0;
      for (int r = 0; r < t; ++r) {
        uint64_t row = uint64_t{1} << pivots[static_cast<size_t>(r)];
        for (int b : free[static_cast<size_t>(r)]) {
          if ((mask >> bit++) & 1) row |= uint64_t{1} << b;
        }
        rows.push_back(row);
      }
      out.push_back(rows);
    }
    return;
  }
  for (int p = below - 1; p >= t - static_cast<int>(pivots.size()) - 1; --p) {
    pivots.push_back(p);
    enumerate_rows(m, t, p, pivots, out);
    pivots.pop_back();
  }
}

}  // namespace

const std::vector<std::string>& lemma_suites() {
  static const std::vector<std::string> names = {"taylor",        "locality_dichotomy", "sparsity_dichotomy",
                                                 "mub_design",    "hashing_props",      "bucket_energy",
                                                 "twirl_identity", "channel_dichotomy"};
  return names;
}

SuiteReport verify_lemmas(const std::string& suite, uint64_t seed) {
  auto it = suite_table().find(suite);
  if (it == suite_table().end()) throw ParameterError("unknown lemma suite '" + suite + "'");
  SuiteReport r;
  r.name = suite;
  Checker c(r);
  uint64_t salt = 1469598103934665603ull;  // FNV-1a of the suite name
  for (unsigned char ch : suite) salt = (salt ^ ch) * 1099511628211ull;
  Rng rng(derive_seed(seed, salt));
  it->second(c, r, rng);
  return r;
}

std::vector<std::vector<uint64_t>> enumerate_subspaces(int m, int t) {
  if (m < 0 || m > 20 || t < 0 || t > m) throw ParameterError("enumerate_subspaces: need 0 <= t <= m <= 20");
  std::vector<std::vector<uint64_t>> out;
  std::vector<int> pivots;
  enumerate_rows(m, t, m, pivots, out);
  return out;
}

}  // namespace hamprobe
