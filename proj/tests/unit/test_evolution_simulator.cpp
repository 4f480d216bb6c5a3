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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hamprobe/dense.hpp"
#include "hamprobe/error.hpp"
#include "hamprobe/evolution.hpp"
#include "hamprobe/instances.hpp"
#include "hamprobe/sampling.hpp"
#include "hamprobe/serialize.hpp"

using namespace hamprobe;

namespace {

PauliString P(const char* label) { return PauliString::from_label(label); }

Hamiltonian make(int n, std::initializer_list<std::pair<const char*, double>> terms) {
  Hamiltonian h(n);
  for (const auto& [l, v] : terms) h.add_term(P(l), v);
  return h;
}

Hamiltonian h3() { return make(3, {{"XZI", 0.3}, {"YYZ", 0.5}, {"IIX", -0.2}, {"ZIZ", 0.4}}); }

OracleOptions exact_mode() { return {OracleMode::exact, 10'000'000'000ull}; }

double spectral_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

TEST_CASE("single-qubit Z evolution") {
  auto h = make(1, {{"Z", 1.0}});
  for (double t : {0.0, 0.3, 1.1}) {
    auto u = evolution_unitary(h, t);
    CHECK(std::abs(u(0, 0) - std::exp(cplx(0, -t))) < 1e-12);
    CHECK(std::abs(u(1, 1) - std::exp(cplx(0, t))) < 1e-12);
    CHECK(std::abs(u(0, 1)) < 1e-12);
    auto spec = evolution_spectrum(h, t);
    CHECK(std::abs(spec.coefficient(P("I")) - cplx(std::cos(t), 0)) < 1e-12);
    CHECK(std::abs(spec.coefficient(P("Z")) - cplx(0, -std::sin(t))) < 1e-12);
  }
}

TEST_CASE("spectrum of a three-qubit Hamiltonian matches a dense oracle") {
  // Reference values from scipy.linalg.expm.
  auto spec = evolution_spectrum(h3(), 0.7);
  CHECK(std::abs(spec.coefficient(P("III")) - cplx(0.8716086808681914, 0)) < 1e-12);
  CHECK(std::abs(spec.coefficient(P("XZI")) - cplx(0, -0.19121722765204555)) < 1e-12);
  CHECK(std::abs(spec.coefficient(P("YYZ")) - cplx(0, -0.32982936785552874)) < 1e-12);
  CHECK(std::abs(spec.coefficient(P("IIX")) - cplx(0, 0.13193174714221145)) < 1e-12);
  CHECK(std::abs(spec.coefficient(P("ZIZ")) - cplx(0, -0.2678717301211859)) < 1e-12);
  CHECK(std::abs(spec.coefficient(P("XZX")) - cplx(0.028122514250917822, 0)) < 1e-12);
  CHECK(std::abs(spec.coefficient(P("YXZ"))) < 1e-12);
  auto top = top_energy(spec, 2);
  CHECK(top.value == doctest::Approx(0.9402443682628839).epsilon(1e-12));
  REQUIRE(top.top.size() == 2);
  CHECK(top.top[0] == P("YYZ"));
  CHECK(top.top[1] == P("ZIZ"));
}

TEST_CASE("unitarity, Parseval and the t = 0 identity") {
  Rng rng(12);
  for (int n = 1; n <= 4; ++n) {
    auto h = random_normalized_hamiltonian(n, 0, rng);
    Propagator prop(h);
    CHECK(prop.operator_norm() == doctest::Approx(1.0));
    CHECK((prop.unitary(0.0) - Eigen::MatrixXcd::Identity(1 << n, 1 << n)).cwiseAbs().maxCoeff() < 1e-12);
    for (double t : {0.1, 0.9, 2.5}) {
      auto u = prop.unitary(t);
      CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(1 << n, 1 << n)).cwiseAbs().maxCoeff() < 1e-9);
      auto probs = prop.spectrum(t).probabilities();
      double total = 0.0;
      for (double p : probs) total += p;
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("first-order Taylor remainder is at most t^2") {
  Rng rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + rep % 4;
    auto h = random_normalized_hamiltonian(n, 0, rng);
    Eigen::MatrixXcd hm = synthesize(h);
    for (double t : {0.5, 0.25, 0.1}) {
      Eigen::MatrixXcd r = evolution_unitary(h, t) - Eigen::MatrixXcd::Identity(1 << n, 1 << n) + cplx(0, t) * hm;
      CHECK(spectral_norm(r) <= t * t);
    }
  }
}

TEST_CASE("second-order term of the identity coefficient shrinks cubically") {
  Rng rng(14);
  auto h = random_normalized_hamiltonian(3, 0, rng);
  double n2 = h.norm2() * h.norm2();
  auto dev = [&](double t) {
    return std::abs(evolution_spectrum(h, t).coefficient(PauliString(3)).real() - (1.0 - t * t / 2.0 * n2));
  };
  double ratio = dev(0.1) / dev(0.05);
  // O(t^3) or better; even Hamiltonian moments make it O(t^4) here.
  CHECK(ratio >= 7.0);
}

TEST_CASE("oracle rejects unnormalised targets and non-unitary matrices") {
  CHECK_THROWS_AS(EvolutionOracle(make(1, {{"Z", 1.5}}), 1), ValidationError);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2) * 2.0;
  CHECK_THROWS_AS(EvolutionOracle::from_unitary(bad, 1), ValidationError);
}

TEST_CASE("bell sampling") {
  EvolutionOracle zero(Hamiltonian(2), 1);
  for (const auto& x : bell_sample(zero, 0.5, 50)) CHECK(x.is_identity());
  CHECK(zero.ledger().queries == 50);
  CHECK(zero.ledger().evolution_time == doctest::Approx(25.0));

  EvolutionOracle z(make(1, {{"Z", 1.0}}), 2);
  auto samples = bell_sample(z, std::numbers::pi / 4, 20000);
  auto freq = empirical_distribution(samples);
  CHECK(freq[P("Z")] == doctest::Approx(0.5).epsilon(0.03));
  CHECK(freq.count(P("X")) == 0);

  // Empirical distribution converges in l_inf at the Hoeffding rate.
  Rng rng(15);
  auto h = random_normalized_hamiltonian(2, 0, rng);
  EvolutionOracle o(h, 3);
  const double eps = 0.02;
  uint64_t shots = hoeffding_count(eps, 0.01, 0.5);
  auto emp = bell_distribution(o, 0.8, shots);
  auto truth = o.spectrum(0.8).probabilities();
  for (size_t i = 0; i < truth.size(); ++i) CHECK(std::abs(emp[i] - truth[i]) <= eps);
  EvolutionOracle ex(h, 3, exact_mode());
  CHECK(bell_distribution(ex, 0.8, 10) == truth);
}

TEST_CASE("coefficient estimation") {
  auto h = make(1, {{"Z", 1.0}});
  EvolutionOracle ex(h, 1, exact_mode());
  auto e = estimate_coefficient(ex, 0.3, P("Z"), 0.05, 0.01);
  CHECK(std::abs(e.value - cplx(0, -std::sin(0.3))) < 1e-12);
  EvolutionOracle id(Hamiltonian(1), 1, exact_mode());
  CHECK(estimate_coefficient(id, 0.3, P("I"), 0.05, 0.01).value == cplx(1.0, 0.0));

  int failures = 0;
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    EvolutionOracle o(h, seed);
    auto est = estimate_coefficient(o, 0.3, P("Z"), 0.05, 0.01);
    if (std::abs(est.value - cplx(0, -std::sin(0.3))) > 0.05) ++failures;
  }
  // delta = 0.01 over 200 seeds; 6 failures would be far in the binomial tail.
  CHECK(failures <= 6);
}

TEST_CASE("memory-less Pauli sampling") {
  auto z = make(1, {{"Z", 1.0}});
  std::vector<PauliString> s{P("I"), P("Z")};
  EvolutionOracle ex(z, 1, exact_mode());
  auto e = memoryless_pauli_sampling(ex, std::numbers::pi / 4, s, 0.05, 0.1);
  CHECK(e.values[0] == doctest::Approx(0.5));
  CHECK(e.values[1] == doctest::Approx(0.5));
  EvolutionOracle sh(z, 2);
  auto n = memoryless_pauli_sampling(sh, std::numbers::pi / 4, s, 0.05, 0.1);
  CHECK(std::abs(n.values[0] - 0.5) <= 0.05);
  CHECK(std::abs(n.values[1] - 0.5) <= 0.05);
  CHECK(sh.ledger().queries == n.rounds);

  EvolutionOracle zero(Hamiltonian(2), 3, exact_mode());
  std::vector<PauliString> all{P("II"), P("XZ"), P("YY")};
  auto zv = memoryless_pauli_sampling(zero, 1.0, all, 0.05, 0.1);
  CHECK(zv.values[0] == doctest::Approx(1.0));
  CHECK(zv.values[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("hit-rate identity by enumeration over all bases, inputs and outcomes") {
  Rng rng(16);
  for (int n = 1; n <= 2; ++n) {
    auto h = random_normalized_hamiltonian(n, 0, rng);
    EvolutionOracle o(h, 1, exact_mode());
    const double t = 0.9;
    Eigen::MatrixXcd u = evolution_unitary(h, t);
    auto spec = evolution_spectrum(h, t);
    MubFamily m(n);
    const double N = static_cast<double>(m.dimension());
    for (uint64_t xi = 0; xi < (uint64_t{1} << (2 * n)); ++xi) {
      auto x = PauliString::from_index(n, xi);
      double acc = 0.0;
      for (uint64_t i = 0; i < m.num_bases(); ++i) {
        Eigen::MatrixXcd b = m.basis_matrix(i);
        Eigen::MatrixXcd amp = b.adjoint() * u * b;
        for (uint64_t j = 0; j < m.dimension(); ++j) {
          // ell(i, j, x) found from the dense conjugation, not the syndrome.
          Eigen::VectorXcd shifted = pauli_matrix(x) * b.col(static_cast<Eigen::Index>(j));
          Eigen::VectorXd overlap = (b.adjoint() * shifted).cwiseAbs();
          Eigen::Index ell;
          overlap.maxCoeff(&ell);
          acc += std::norm(amp(ell, static_cast<Eigen::Index>(j)));
        }
      }
      acc /= N * (N + 1);
      double expected = 1.0 / (N + 1) + N / (N + 1) * std::norm(spec.coefficient(x));
      CHECK(acc == doctest::Approx(expected).epsilon(1e-9));
      CHECK(memoryless_hit_rate(o, t, x) == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("memory-less coefficient estimation") {
  auto f = canonical_factorization(P("Z"));
  CHECK(f.x1 == P("X"));
  CHECK(f.x2 == P("Y"));
  CHECK(i_pow(f.a_phase_exp) == cplx(0, 1));
  CHECK_THROWS_AS(canonical_factorization(P("II")), ParameterError);
  for (const char* l : {"XZ", "YI", "IZ", "ZYX"}) {
    auto g = canonical_factorization(P(l));
    CHECK_FALSE(commutes(g.x1, g.x2));
    auto pr = pauli_product(g.x1, g.x2);
    CHECK(pr.pauli == P(l));
    CHECK(pr.phase_exp % 2 == 1);
  }

  auto h = make(1, {{"Z", 0.6}});
  EvolutionOracle ex(h, 1, exact_mode());
  // Trace value from a dense oracle: -Tr[Y U X U^dagger]/2 at eps = 0.05.
  CHECK(memoryless_coefficient_mean(ex, P("Z"), 0.05) == doctest::Approx(-0.0599640064794446).epsilon(1e-12));
  auto e = memoryless_estimate_coefficient(ex, P("Z"), 0.05, 0.1);
  CHECK(e.value.real() == doctest::Approx(0.599640064794446).epsilon(1e-12));
  CHECK(std::abs(e.value.real() - 0.6) <= 0.05);
  CHECK(memoryless_estimate_coefficient(ex, P("X"), 0.05, 0.1).value.real() == doctest::Approx(0.0));
  CHECK_THROWS_AS(memoryless_estimate_coefficient(ex, P("I"), 0.05, 0.1), ParameterError);

  EvolutionOracle sh(h, 2);
  auto s = memoryless_estimate_coefficient(sh, P("Z"), 0.1, 0.1);
  CHECK(std::abs(s.value.real() - 0.6) <= 0.1);
}

TEST_CASE("sample counts") {
  CHECK(hoeffding_count(0.1, 0.05, 0.5) == 185);
  CHECK(hoeffding_count(0.05, 0.01) == 4239);
  CHECK(bernstein_count(0.1, 0.05, 0.01) < bernstein_count(0.1, 0.05, 0.25));
  CHECK(bernstein_count(0.1, 0.05, 0.0) < bernstein_count(0.1, 0.05, 0.01));
  CHECK_THROWS_AS(hoeffding_count(0.1, 1.5), ParameterError);
  CHECK(ceil_count(1e30) == std::numeric_limits<uint64_t>::max());

  std::vector<PauliString> one{P("XY")};
  auto d = empirical_distribution(one);
  CHECK(d.size() == 1);
  CHECK(d[P("XY")] == 1.0);
  std::vector<PauliString> none;
  CHECK_THROWS_AS(empirical_distribution(none), ParameterError);
}

TEST_CASE("ledger accounting and clamping") {
  auto h = make(1, {{"X", 0.5}});
  EvolutionOracle o(h, 1, {OracleMode::shot_noise, 1000});
  auto b = o.clamp(5000.0);
  CHECK(b.shots == 1000);
  CHECK(b.clamped);
  QueryLedger before = o.ledger();
  bell_sample(o, 0.25, 100);
  estimate_coefficient(o, 0.5, P("X"), 0.3, 0.1);
  QueryLedger diff = o.ledger() - before;
  uint64_t coef_shots = 2 * hoeffding_count(0.3 / std::sqrt(2.0), 0.05);
  CHECK(diff.queries == 100 + coef_shots);
  CHECK(diff.evolution_time == doctest::Approx(100 * 0.25 + coef_shots * 0.5));
}

TEST_CASE("spectrum CSV") {
  std::ostringstream os;
  write_spectrum_csv(os, evolution_spectrum(make(1, {{"Z", 1.0}}), std::numbers::pi / 4));
  std::string text = os.str();
  CHECK(text.rfind("pauli_label,re,im,prob\n", 0) == 0);
  CHECK(text.find("\nZ,") != std::string::npos);
  CHECK(text.find("\nX,") == std::string::npos);
}
