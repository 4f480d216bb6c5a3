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
#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "hamprobe/dense.hpp"
#include "hamprobe/error.hpp"
#include "hamprobe/hamiltonian.hpp"
#include "hamprobe/instances.hpp"
#include "hamprobe/serialize.hpp"

using namespace hamprobe;

namespace {

PauliString P(const char* label) { return PauliString::from_label(label); }

Hamiltonian make(int n, std::initializer_list<std::pair<const char*, double>> terms) {
  Hamiltonian h(n);
  for (const auto& [l, v] : terms) h.add_term(P(l), v);
  return h;
}

Eigen::MatrixXcd random_hermitian(int dim, Rng& rng) {
  Eigen::MatrixXcd a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = cplx(uniform01(rng) - 0.5, uniform01(rng) - 0.5);
  return (a + a.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("pauli_decompose examples") {
  Eigen::MatrixXcd z(2, 2);
  z << 1, 0, 0, -1;
  auto h = pauli_decompose(z);
  REQUIRE(h.size() == 1);
  CHECK(h.coefficient(P("Z")) == doctest::Approx(1.0));
  CHECK(pauli_decompose(Eigen::MatrixXcd::Zero(4, 4)).size() == 0);
  Eigen::MatrixXcd bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(pauli_decompose(bad), ValidationError);
}

TEST_CASE("decompose and synthesize round-trip with Parseval") {
  Rng rng(21);
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      Eigen::MatrixXcd m = random_hermitian(1 << n, rng);
      auto h = pauli_decompose(m);
      CHECK((synthesize(h) - m).cwiseAbs().maxCoeff() < 1e-9);
      double tr = (m * m).trace().real() / static_cast<double>(1 << n);
      CHECK(h.norm2() * h.norm2() == doctest::Approx(tr).epsilon(1e-9));
    }
  }
}

TEST_CASE("frobenius distance examples") {
  auto a = make(2, {{"XI", 0.8}, {"ZZ", 0.6}});
  auto b = make(2, {{"XI", 0.8}});
  CHECK((a - a).norm2() == 0.0);
  CHECK((a - b).norm2() == doctest::Approx(0.6));
  CHECK((make(1, {{"Z", 1.0}}) - Hamiltonian(1)).norm2() == doctest::Approx(1.0));
  Eigen::MatrixXcd d = synthesize(a) - synthesize(b);
  CHECK(std::sqrt((d * d).trace().real() / 4.0) == doctest::Approx(0.6));
  CHECK_THROWS_AS(a - Hamiltonian(3), DimensionError);
}

TEST_CASE("add_term drops cancelled entries and rejects non-finite values") {
  Hamiltonian h(2);
  h.add_term(P("XY"), 0.3);
  h.add_term(P("XY"), -0.3);
  CHECK(h.size() == 0);
  h.set_term(P("ZZ"), 0.5);
  h.set_term(P("ZZ"), 0.0);
  CHECK(h.size() == 0);
  CHECK_THROWS_AS(h.add_term(P("XX"), std::nan("")), ValidationError);
  CHECK_THROWS_AS(h.add_term(P("X"), 1.0), DimensionError);
  CHECK(h.is_traceless());
  h.add_term(P("II"), 0.1);
  CHECK_FALSE(h.is_traceless());
}

TEST_CASE("distance_to_local examples") {
  CHECK(distance_to_local(make(3, {{"ZII", 1.0}}), 1) == 0.0);
  CHECK(distance_to_local(make(3, {{"XXX", 1.0}}), 2) == doctest::Approx(1.0));
  CHECK(distance_to_local(make(3, {{"ZII", 0.6}, {"XXX", 0.8}}), 2) == doctest::Approx(0.8));
}

TEST_CASE("distance_to_sparse examples and brute force") {
  auto h = make(2, {{"XI", 0.8}, {"ZZ", 0.6}});
  CHECK(distance_to_sparse(h, 1) == doctest::Approx(0.6));
  CHECK(distance_to_sparse(h, 2) == 0.0);
  CHECK(distance_to_sparse(h, 100) == 0.0);
  CHECK_THROWS_AS(distance_to_sparse(h, -1), ParameterError);

  Rng rng(4);
  Hamiltonian r(3);
  for (uint64_t i = 1; i <= 10; ++i) r.set_term(PauliString::from_index(3, i * 5), uniform01(rng) * 2 - 1);
  std::vector<double> c;
  for (const auto& [x, v] : r.terms()) c.push_back(v);
  double best = 1e9;
  for (uint32_t mask = 0; mask < (1u << c.size()); ++mask) {
    if (std::popcount(mask) != 4) continue;
    double acc = 0.0;
    for (size_t i = 0; i < c.size(); ++i)
      if (!(mask >> i & 1)) acc += c[i] * c[i];
    best = std::min(best, std::sqrt(acc));
  }
  CHECK(distance_to_sparse(r, 4) == doctest::Approx(best));
}

TEST_CASE("distances are monotone and vanish at the top of the range") {
  Rng rng(8);
  for (int rep = 0; rep < 10; ++rep) {
    auto h = random_normalized_hamiltonian(3, 0, rng);
    double prev = 1e9;
    for (int k = 0; k <= 3; ++k) {
      double d = distance_to_local(h, k);
      CHECK(d <= prev + 1e-15);
      CHECK(d <= h.norm2() + 1e-12);
      prev = d;
    }
    CHECK(distance_to_local(h, 3) == 0.0);
    prev = 1e9;
    for (int64_t s = 0; s <= 64; ++s) {
      double d = distance_to_sparse(h, s);
      CHECK(d <= prev + 1e-15);
      prev = d;
    }
    CHECK(distance_to_sparse(h, 64) == 0.0);
  }
}

TEST_CASE("operator norm examples") {
  CHECK(operator_norm(make(1, {{"Z", 1.0}})) == doctest::Approx(1.0));
  CHECK(operator_norm(make(1, {{"X", 0.5}, {"Z", 0.5}})) == doctest::Approx(std::sqrt(0.5)));
  // Frozen from a dense eigenvalue oracle.
  auto h3 = make(3, {{"XZI", 0.3}, {"YYZ", 0.5}, {"IIX", -0.2}, {"ZIZ", 0.4}});
  CHECK(operator_norm(h3) == doctest::Approx(0.9290370759168178).epsilon(1e-12));
  Rng rng(2);
  for (int rep = 0; rep < 20; ++rep) {
    Hamiltonian h(3);
    for (int i = 0; i < 6; ++i) h.add_term(PauliString::from_index(3, 1 + uniform_below(rng, 63)), uniform01(rng) - 0.5);
    CHECK(h.norm2() <= operator_norm(h) + 1e-12);
  }
}

TEST_CASE("ranked terms break ties by canonical order") {
  auto h = make(2, {{"ZI", 0.5}, {"XI", -0.5}, {"IY", 0.9}});
  auto r = ranked_terms(h);
  REQUIRE(r.size() == 3);
  CHECK(r[0].first == P("IY"));
  CHECK(r[1].first == P("XI"));
  CHECK(r[2].first == P("ZI"));
  auto rep = structure_report(h, 1, 1);
  CHECK(rep.distance_to_k_local == 0.0);
  CHECK(rep.distance_to_s_sparse == doctest::Approx(std::sqrt(0.5)));
  CHECK(rep.sorted_magnitudes == std::vector<double>{0.9, 0.5, 0.5});
}

TEST_CASE("generated instances meet their certificates") {
  Rng rng(31);
  const int n = 4;
  for (int rep = 0; rep < 10; ++rep) {
    InstanceParams p;
    p.k = 1;
    p.s = 3;
    auto check_norm = [](const Hamiltonian& h) {
      CHECK(h.is_traceless());
      CHECK(operator_norm(h) <= 1.0 + 1e-9);
    };
    auto loc = generate_instance(InstanceKind::k_local, n, p, rng);
    check_norm(loc);
    CHECK(distance_to_local(loc, 1) == 0.0);
    auto sp = generate_instance(InstanceKind::s_sparse, n, p, rng);
    check_norm(sp);
    CHECK(sp.size() <= 3);
    auto ls = generate_instance(InstanceKind::k_local_s_sparse, n, p, rng);
    CHECK(ls.size() <= 3);
    CHECK(distance_to_local(ls, 1) == 0.0);

    p.eps = 0.1;
    auto cl = generate_instance(InstanceKind::close_to_k_local, n, p, rng);
    check_norm(cl);
    CHECK(distance_to_local(cl, 1) <= 0.1 + 1e-12);
    auto cs = generate_instance(InstanceKind::close_to_s_sparse, n, p, rng);
    check_norm(cs);
    CHECK(distance_to_sparse(cs, 3) <= 0.1 + 1e-12);

    p.eps = 0.5;
    auto fl = generate_instance(InstanceKind::far_from_k_local, n, p, rng);
    check_norm(fl);
    CHECK(distance_to_local(fl, 1) >= 0.5);
    auto fs = generate_instance(InstanceKind::far_from_s_sparse, n, p, rng);
    check_norm(fs);
    CHECK(distance_to_sparse(fs, 3) >= 0.5);
  }
  InstanceParams all;
  all.k = n;
  CHECK(distance_to_local(generate_instance(InstanceKind::k_local, n, all, rng), n) == 0.0);
}

TEST_CASE("generation is deterministic and infeasible requests fail") {
  InstanceParams p;
  p.k = 1;
  p.eps = 0.5;
  Rng a(77), b(77);
  auto ha = generate_instance(InstanceKind::far_from_k_local, 3, p, a);
  auto hb = generate_instance(InstanceKind::far_from_k_local, 3, p, b);
  CHECK(ha.terms() == hb.terms());
  p.s = 2;
  p.eps = 0.95;
  Rng c(1);
  CHECK_THROWS_AS(generate_instance(InstanceKind::far_from_s_sparse, 3, p, c), GenerationError);
  p.k = 3;
  CHECK_THROWS_AS(generate_instance(InstanceKind::far_from_k_local, 3, p, c), GenerationError);
  CHECK(parse_instance_kind(to_string(InstanceKind::close_to_s_sparse)) == InstanceKind::close_to_s_sparse);
}

TEST_CASE("text format parses, rejects bad input and round-trips") {
  std::istringstream ok("# comment\nXIZ 0.25\nYYI -0.5  # trailing\n\n");
  auto h = parse_hamiltonian_text(ok);
  CHECK(h.num_qubits() == 3);
  CHECK(h.coefficient(P("XIZ")) == 0.25);
  CHECK(h.coefficient(P("YYI")) == -0.5);
  std::istringstream again(format_hamiltonian_text(h));
  CHECK(parse_hamiltonian_text(again).terms() == h.terms());

  std::istringstream dup("XI 0.1\nXI 0.2\n");
  CHECK_THROWS_AS(parse_hamiltonian_text(dup), ValidationError);
  std::istringstream inf("XI inf\n");
  CHECK_THROWS_AS(parse_hamiltonian_text(inf), ValidationError);
  std::istringstream nan("XI nan\n");
  CHECK_THROWS_AS(parse_hamiltonian_text(nan), ValidationError);
  std::istringstream mixed("XI 0.1\nXII 0.2\n");
  CHECK_THROWS_AS(parse_hamiltonian_text(mixed), DimensionError);
  std::istringstream garbage("XI 0.1x\n");
  CHECK_THROWS_AS(parse_hamiltonian_text(garbage), IoError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_hamiltonian_text(empty), IoError);
  CHECK_THROWS_AS(load_hamiltonian("/nonexistent/h.txt"), IoError);
}

TEST_CASE("JSON mirror round-trips and validates") {
  auto h = make(3, {{"XZI", 0.3}, {"YYZ", -0.125}});
  auto j = hamiltonian_to_json(h);
  CHECK(j["n"] == 3);
  CHECK(hamiltonian_from_json(j).terms() == h.terms());
  auto dup = json::parse(R"({"n":1,"terms":[{"label":"X","coef":0.1},{"label":"X","coef":0.2}]})");
  CHECK_THROWS_AS(hamiltonian_from_json(dup), ValidationError);
  auto wrong_n = json::parse(R"({"n":2,"terms":[{"label":"X","coef":0.1}]})");
  CHECK_THROWS_AS(hamiltonian_from_json(wrong_n), ValidationError);
}
