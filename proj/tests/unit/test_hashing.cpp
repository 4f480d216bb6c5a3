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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hamprobe/channel.hpp"
#include "hamprobe/error.hpp"
#include "hamprobe/hashing.hpp"
#include "hamprobe/instances.hpp"
#include "hamprobe/walsh.hpp"

using namespace hamprobe;

namespace {

PauliString P(const char* label) { return PauliString::from_label(label); }

OracleOptions exact_mode() { return {OracleMode::exact, 10'000'000'000ull}; }

PauliChannel n1_channel() { return PauliChannel(1, {{P("I"), 0.7}, {P("X"), 0.1}, {P("Y"), 0.1}, {P("Z"), 0.1}}); }

PauliChannel random_channel(int n, Rng& rng) {
  std::vector<double> p(size_t{1} << (2 * n));
  double total = 0.0;
  for (double& v : p) {
    v = -std::log(1.0 - uniform01(rng));
    total += v;
  }
  for (double& v : p) v /= total;
  return PauliChannel::from_dense(n, p);
}

}  // namespace

TEST_CASE("bucket energies examples") {
  SymplecticSubgroup vz(1, {P("Z")});
  auto e = bucket_energies_exact(n1_channel(), vz).energies;
  REQUIRE(e.size() == 2);
  CHECK(e[0] == doctest::Approx(0.8));
  CHECK(e[1] == doctest::Approx(0.2));

  SymplecticSubgroup trivial(1, {});
  auto t0 = bucket_energies_exact(n1_channel(), trivial).energies;
  REQUIRE(t0.size() == 1);
  CHECK(t0[0] == doctest::Approx(1.0));

  // Frozen from a direct coset sum.
  PauliChannel c2(2, {{P("II"), 0.5}, {P("XI"), 0.1}, {P("IZ"), 0.15}, {P("YY"), 0.05}, {P("ZX"), 0.2}});
  SymplecticSubgroup v2(2, {P("XX"), P("ZI")});
  auto e2 = bucket_energies_exact(c2, v2).energies;
  std::vector<double> expected{0.5, 0.35, 0.15, 0.0};
  for (size_t b = 0; b < 4; ++b) CHECK(e2[b] == doctest::Approx(expected[b]).epsilon(1e-12));
}

TEST_CASE("fidelity-sum and coset-sum bucket energies agree") {
  Rng rng(1);
  for (int n = 1; n <= 2; ++n) {
    for (int t = 0; t <= 2 * n; ++t) {
      auto ch = random_channel(n, rng);
      auto v = random_subgroup(n, t, rng);
      auto a = bucket_energies_exact(ch, v).energies;
      auto b = bucket_energies_coset_sum(ch, v).energies;
      double total = 0.0;
      for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
        total += a[i];
      }
      CHECK(total == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("coset projection and coset weight") {
  Rng rng(2);
  const int n = 2;
  std::vector<double> one(16, 1.0);
  auto v = random_subgroup(n, 2, rng);
  for (uint64_t ai = 0; ai < 16; ++ai) {
    auto a = PauliString::from_index(n, ai);
    bool has_zero = v.contains(a);
    CHECK(coset_weight(one, a, v) == doctest::Approx(has_zero ? 1.0 : 0.0));
  }

  std::vector<double> f(16);
  for (double& x : f) x = uniform01(rng) - 0.5;
  auto fh = symplectic_fourier(f, n);
  for (int t = 0; t <= 4; ++t) {
    auto w = random_subgroup(n, t, rng);
    for (uint64_t ai = 0; ai < 16; ++ai) {
      auto a = PauliString::from_index(n, ai);
      // Projection keeps exactly the Fourier coefficients on a + V.
      for (uint64_t zi = 0; zi < 16; ++zi) {
        auto z = PauliString::from_index(n, zi);
        double direct = 0.0;
        for (const auto& y : w.elements()) {
          auto alpha = a ^ y;
          direct += fh[alpha.index()] * (symplectic_inner(alpha, z) ? -1.0 : 1.0);
        }
        CHECK(project_coset(f, a, w, z) == doctest::Approx(direct).epsilon(1e-12));
      }
      double weight = 0.0;
      for (const auto& y : w.elements()) weight += fh[(a ^ y).index()] * fh[(a ^ y).index()];
      CHECK(coset_weight(f, a, w) == doctest::Approx(weight).epsilon(1e-12));
      CHECK(coset_weight_autocorrelation(f, a, w) == doctest::Approx(weight).epsilon(1e-12));
    }
    if (t == 0) {
      auto a = P("XZ");
      CHECK(coset_weight(f, a, w) == doctest::Approx(fh[a.index()] * fh[a.index()]));
    }
  }
}

TEST_CASE("estimated bucket energies") {
  Rng rng(3);
  auto ch = generate_channel(ChannelKind::depolarizing, 2, 1, 0.3, rng);
  auto v = random_subgroup(2, 3, rng);
  auto truth = bucket_energies_exact(ch, v).energies;
  ChannelOracle ex(ch, 1, exact_mode());
  auto et = estimate_bucket_energies(ex, v, 0.05, 0.1);
  for (size_t b = 0; b < truth.size(); ++b) CHECK(et.energies[b] == doctest::Approx(truth[b]).epsilon(1e-12));
  CHECK(et.shots_per_fidelity == hashing_shots_per_fidelity(3, 0.05, 0.1));
  CHECK(ex.ledger().queries == 8 * et.shots_per_fidelity);
  CHECK(hashing_shots_per_fidelity(3, 0.05, 0.1) == static_cast<uint64_t>(std::ceil(std::log(8 / 0.1) / 0.0025)));

  const double eps = 0.05, delta = 0.1;
  int failures = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    ChannelOracle o(ch, seed);
    auto est = estimate_bucket_energies(o, v, eps, delta);
    double worst = 0.0;
    for (size_t b = 0; b < truth.size(); ++b) worst = std::max(worst, std::abs(est.energies[b] - truth[b]));
    if (worst > eps) ++failures;
  }
  CHECK(failures <= 10 + 6);
}

TEST_CASE("channel sparsity tester examples") {
  Rng rng(4);
  PauliChannel close(2, {{P("II"), 0.95}, {P("XI"), 0.05}});
  ChannelOracle co(close, 1, exact_mode());
  CHECK(test_channel_sparsity(co, 2, 0.1, 0.8, 0.1, rng).verdict == Verdict::close);

  std::vector<double> uniform(16, 1.0 / 16);
  auto flat = PauliChannel::from_dense(2, uniform);
  CHECK(distance_to_sparse_channel(flat, 1) == doctest::Approx(15.0 / 16));
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    ChannelOracle fo(flat, seed);
    auto d = test_channel_sparsity(fo, 1, 0.05, 0.9, 0.1, rng);
    CHECK(d.verdict == Verdict::far);
    CHECK(d.generators.size() == static_cast<size_t>(d.thresholds["t"]));
  }
  CHECK_THROWS_AS(test_channel_sparsity(co, 1, 0.3, 0.6, 0.1, rng), ParameterError);
  CHECK_THROWS_AS(test_channel_sparsity(co, 0, 0.1, 0.6, 0.1, rng), ParameterError);
}

TEST_CASE("undecided verdict between thresholds") {
  // Energy(1) = 0.6 sits between accept 0.7 and reject 0.5 at eps1 = 0.05, eps2 = 0.6.
  PauliChannel mid(1, {{P("I"), 0.6}, {P("X"), 0.4}});
  ChannelOracle o(mid, 1, exact_mode());
  Rng rng(5);
  auto d = test_channel_sparsity(o, 1, 0.05, 0.6, 0.1, rng);
  CHECK(d.thresholds["accept"] > d.gamma);
  CHECK(d.thresholds["reject"] < d.gamma);
  CHECK(d.verdict == Verdict::undecided);
}

TEST_CASE("hashing diagnostics") {
  PauliChannel iso(2, {{P("II"), 0.6}, {P("XI"), 0.3}, {P("ZZ"), 0.1}});
  SymplecticSubgroup full(2, {P("XI"), P("ZI"), P("IX"), P("IZ")});
  auto d = hashing_diagnostics(iso, full, 2);
  CHECK(d.err_total == doctest::Approx(0.0));
  for (double e : d.err) CHECK(e == doctest::Approx(0.0));

  PauliChannel two(1, {{P("I"), 0.75}, {P("Y"), 0.25}});
  auto t0 = hashing_diagnostics(two, SymplecticSubgroup(1, {}), 1);
  REQUIRE(t0.err.size() == 1);
  CHECK(t0.err[0] == doctest::Approx(0.25));

  Rng rng(6);
  for (int rep = 0; rep < 20; ++rep) {
    auto ch = random_channel(3, rng);
    auto v = random_subgroup(3, 3, rng);
    auto hd = hashing_diagnostics(ch, v, 2);
    CHECK(hd.err_total >= -1e-12);
    CHECK(std::is_sorted(hd.sorted_energies.rbegin(), hd.sorted_energies.rend()));
    for (size_t j = 0; j < hd.max_rates.size(); ++j) CHECK(hd.max_rates[j] <= hd.sorted_energies[j] + 1e-12);
  }
}

TEST_CASE("collision error mean stays under sqrt(2s/2^t)") {
  Rng rng(7);
  auto ch = random_channel(3, rng);
  const int64_t s = 2;
  for (int t = 2; t <= 5; ++t) {
    double acc = 0.0;
    const int draws = 300;
    for (int r = 0; r < draws; ++r) acc += hashing_diagnostics(ch, random_subgroup(3, t, rng), s).err_total;
    CHECK(acc / draws <= std::sqrt(2.0 * s / std::ldexp(1.0, t)));
  }
}

TEST_CASE("bucket energies of the twirled evolution") {
  Hamiltonian z(1);
  z.add_term(P("Z"), 1.0);
  EvolutionOracle oz(z, 1, exact_mode());
  SymplecticSubgroup vz(1, {P("Z")});
  auto e = estimate_bucket_energies_hamiltonian(oz, std::numbers::pi / 4, vz, 100);
  CHECK(e.energies[0] == doctest::Approx(1.0));
  CHECK(e.energies[1] == doctest::Approx(0.0));
  auto e0 = estimate_bucket_energies_hamiltonian(oz, 0.0, SymplecticSubgroup(1, {P("X")}), 100);
  CHECK(e0.energies[0] == doctest::Approx(1.0));

  Rng rng(8);
  for (int rep = 0; rep < 5; ++rep) {
    auto h = random_normalized_hamiltonian(3, 6, rng);
    auto v = random_subgroup(3, 4, rng);
    EvolutionOracle o(h, 1, exact_mode());
    auto got = estimate_bucket_energies_hamiltonian(o, 0.3, v, 10).energies;
    auto want = bucket_energies_exact(twirled_channel_from_evolution(h, 0.3), v).energies;
    for (size_t b = 0; b < want.size(); ++b) CHECK(got[b] == doctest::Approx(want[b]).epsilon(1e-12));
  }
}

TEST_CASE("memory-less Hamiltonian sparsity tester") {
  Rng rng(9);
  Hamiltonian one(3);
  one.add_term(P("ZII"), 0.9);
  EvolutionOracle o1(one, 1, exact_mode());
  CHECK(test_hamiltonian_sparsity_memoryless(o1, 1, 0.2, 0.9, 0.1, rng).verdict == Verdict::close);

  Hamiltonian two(3);
  two.add_term(P("XII"), 0.7);
  two.add_term(P("ZII"), 0.7);
  CHECK(distance_to_sparse(two, 1) >= 0.6);
  EvolutionOracle o2(two, 1, exact_mode());
  CHECK(test_hamiltonian_sparsity_memoryless(o2, 1, 0.1, 0.6, 0.1, rng).verdict == Verdict::far);

  for (int rep = 0; rep < 5; ++rep) {
    auto h = random_normalized_hamiltonian(3, 5, rng);
    EvolutionOracle o(h, 1, exact_mode());
    auto d = test_hamiltonian_sparsity_memoryless(o, 2, 0.1, 0.7, 0.1, rng);
    double top = top_energy(evolution_spectrum(h, d.evolution_time), 2).value;
    CHECK(std::abs(d.gamma - top) <= d.thresholds["eps"]);
  }
  CHECK_THROWS_AS(test_hamiltonian_sparsity_memoryless(o1, 1, 0.5, 0.4, 0.1, rng), ParameterError);
}
