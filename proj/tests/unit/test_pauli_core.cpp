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
#include <set>

#include "hamprobe/dense.hpp"
#include "hamprobe/error.hpp"
#include "hamprobe/mub.hpp"
#include "hamprobe/pauli.hpp"
#include "hamprobe/rng.hpp"
#include "hamprobe/subgroup.hpp"
#include "hamprobe/walsh.hpp"

using namespace hamprobe;

namespace {

PauliString P(const char* label) { return PauliString::from_label(label); }

std::vector<PauliString> all_strings(int n) {
  std::vector<PauliString> out;
  for (uint64_t i = 0; i < (uint64_t{1} << (2 * n)); ++i) out.push_back(PauliString::from_index(n, i));
  return out;
}

// Independent kron-product builder used as the dense reference.
Eigen::MatrixXcd reference_matrix(const std::string& label) {
  using C = std::complex<double>;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : label) {
    Eigen::Matrix2cd s;
    if (c == 'I') s << 1, 0, 0, 1;
    if (c == 'X') s << 0, 1, 1, 0;
    if (c == 'Y') s << 0, C(0, -1), C(0, 1), 0;
    if (c == 'Z') s << 1, 0, 0, -1;
    Eigen::MatrixXcd k(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < m.rows(); ++r)
      for (int q = 0; q < m.cols(); ++q) k.block(2 * r, 2 * q, 2, 2) = m(r, q) * s;
    m = k;
  }
  return m;
}

}  // namespace

TEST_CASE("labels, indices and hex forms round-trip") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& x : all_strings(n)) {
      CHECK(PauliString::from_label(x.label()) == x);
      CHECK(PauliString::from_hex(n, x.hex()) == x);
      CHECK(PauliString::from_index(n, x.index()) == x);
      CHECK(PauliString::from_key(n, x.key()) == x);
    }
  }
  CHECK(P("XIZY").weight() == 3);
  CHECK(P("XIZY").at(3) == 'Y');
  CHECK(PauliString::single(3, 1, 'Z') == P("IZI"));
  CHECK_THROWS_AS(P("XQ"), ValidationError);
  CHECK_THROWS_AS(PauliString::from_hex(2, "3"), ValidationError);
  CHECK_THROWS_AS(PauliString(2, 0b100, 0), DimensionError);
}

TEST_CASE("canonical order is I < X < Z < Y per qubit, qubit 0 most significant") {
  CHECK(P("I") < P("X"));
  CHECK(P("X") < P("Z"));
  CHECK(P("Z") < P("Y"));
  CHECK(P("XI") > P("IY"));
}

TEST_CASE("symplectic inner product examples") {
  CHECK(symplectic_inner(P("X"), P("Z")) == 1);
  CHECK(symplectic_inner(P("XX"), P("ZZ")) == 0);
  for (const auto& x : all_strings(2)) CHECK(symplectic_inner(x, P("II")) == 0);
  CHECK_THROWS_AS(symplectic_inner(P("X"), P("XX")), DimensionError);
}

TEST_CASE("pauli_product examples") {
  auto xz = pauli_product(P("X"), P("Z"));
  CHECK(xz.phase_exp == 3);
  CHECK(xz.pauli == P("Y"));
  auto xx = pauli_product(P("XYZ"), P("XYZ"));
  CHECK(xx.phase_exp == 0);
  CHECK(xx.pauli.is_identity());
  // (X Z)(Z Z) = (XZ) (ZZ) = -iY (x) I, checked against the dense product.
  auto pr = pauli_product(P("XZ"), P("ZZ"));
  CHECK(pr.pauli == P("YI"));
  CHECK(pr.phase_exp == 3);
  Eigen::MatrixXcd lhs = reference_matrix("XZ") * reference_matrix("ZZ");
  Eigen::MatrixXcd rhs = i_pow(pr.phase_exp) * reference_matrix("YI");
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("commutation and products agree with dense matrices for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    auto strings = all_strings(n);
    for (const auto& x : strings) {
      Eigen::MatrixXcd mx = pauli_matrix(x);
      REQUIRE((mx - reference_matrix(x.label())).cwiseAbs().maxCoeff() < 1e-12);
    }
    for (const auto& x : strings) {
      Eigen::MatrixXcd mx = pauli_matrix(x);
      for (const auto& y : strings) {
        Eigen::MatrixXcd my = pauli_matrix(y);
        Eigen::MatrixXcd xy = mx * my;
        double sign = symplectic_inner(x, y) ? -1.0 : 1.0;
        CHECK((xy - sign * my * mx).cwiseAbs().maxCoeff() < 1e-12);
        auto pr = pauli_product(x, y);
        CHECK(pr.pauli == (x ^ y));
        CHECK((xy - i_pow(pr.phase_exp) * pauli_matrix(pr.pauli)).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("pauli matrices are orthonormal in the normalised trace inner product") {
  CHECK((pauli_matrix(P("I")) - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-15);
  Eigen::MatrixXcd z(2, 2);
  z << 1, 0, 0, -1;
  CHECK((pauli_matrix(P("Z")) - z).norm() < 1e-15);
  auto strings = all_strings(2);
  for (const auto& x : strings) {
    for (const auto& y : strings) {
      cplx tr = (pauli_matrix(x) * pauli_matrix(y)).trace() / 4.0;
      CHECK(std::abs(tr - cplx(x == y ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("pauli_coefficients inverts the dense expansion") {
  Rng rng(7);
  const int n = 2;
  std::vector<cplx> c(16);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  for (uint64_t i = 0; i < 16; ++i) {
    c[i] = cplx(uniform01(rng) - 0.5, uniform01(rng) - 0.5);
    m += c[i] * pauli_matrix(PauliString::from_index(n, i));
  }
  auto back = pauli_coefficients(m, n);
  for (uint64_t i = 0; i < 16; ++i) CHECK(std::abs(back[i] - c[i]) < 1e-12);
}

TEST_CASE("dense cap raises a capacity error") {
  CHECK_THROWS_AS(require_dense(dense_cap() + 1, "test"), CapacityError);
  CHECK_NOTHROW(require_dense(dense_cap(), "test"));
}

TEST_CASE("weight enumeration counts") {
  CHECK(count_weight_at_most(3, 0) == 1);
  CHECK(count_weight_at_most(3, 1) == 10);
  CHECK(count_weight_at_most(3, 3) == 64);
  uint64_t seen = 0;
  for_each_weight_at_most(4, 2, [&](const PauliString& x) {
    CHECK(x.weight() <= 2);
    ++seen;
  });
  CHECK(seen == 1 + 12 + 54);
}

TEST_CASE("bucket_index examples and partition") {
  SymplecticSubgroup vz(1, {P("Z")});
  CHECK(vz.bucket_index(P("Z")) == 0);
  CHECK(vz.bucket_index(P("X")) == 1);
  CHECK(vz.bucket_index(P("I")) == 0);

  Rng rng(11);
  for (int t = 0; t <= 6; ++t) {
    auto v = random_subgroup(3, t, rng);
    CHECK(v.dim() == t);
    std::vector<int> counts(size_t{1} << t, 0);
    std::vector<std::set<PauliString>> reps(size_t{1} << t);
    for (const auto& x : all_strings(3)) {
      uint64_t b = v.bucket_index(x);
      REQUIRE(b < counts.size());
      ++counts[b];
      reps[b].insert(x);
      CHECK(v.in_complement(x) == (b == 0));
    }
    for (size_t b = 0; b < counts.size(); ++b) {
      CHECK(counts[b] == (64 >> t));
      CHECK(v.coset_representative(b) == *reps[b].begin());
    }
  }
}

TEST_CASE("bucket_index is a group homomorphism") {
  Rng rng(3);
  auto v = random_subgroup(3, 4, rng);
  auto strings = all_strings(3);
  for (const auto& x : strings)
    for (const auto& y : strings) CHECK(v.bucket_index(x ^ y) == (v.bucket_index(x) ^ v.bucket_index(y)));
}

TEST_CASE("random_subgroup parameters and determinism") {
  Rng rng(1);
  auto trivial = random_subgroup(2, 0, rng);
  CHECK(trivial.elements().size() == 1);
  CHECK(trivial.elements()[0].is_identity());
  CHECK_THROWS_AS(random_subgroup(2, 5, rng), ParameterError);
  Rng a(42), b(42);
  auto va = random_subgroup(4, 5, a);
  auto vb = random_subgroup(4, 5, b);
  CHECK(va.generators() == vb.generators());
  CHECK_THROWS_AS(SymplecticSubgroup(1, {P("X"), P("X")}), ParameterError);
}

TEST_CASE("subspace sum indicator over a random subgroup") {
  Rng rng(5);
  auto v = random_subgroup(3, 3, rng);
  auto elems = v.elements();
  for (const auto& a : all_strings(3)) {
    double acc = 0.0;
    for (const auto& x : elems) acc += symplectic_inner(a, x) ? -1.0 : 1.0;
    acc /= static_cast<double>(elems.size());
    CHECK(acc == doctest::Approx(v.in_complement(a) ? 1.0 : 0.0));
  }
}

TEST_CASE("symplectic Fourier transform is an involution up to 4^n") {
  Rng rng(9);
  const int n = 2;
  std::vector<double> f(16);
  for (double& v : f) v = uniform01(rng) - 0.5;
  auto fh = symplectic_fourier(f, n);
  // Direct definition: fhat(a) = 4^{-n} sum_x f(x) (-1)^{[a, x]}.
  for (uint64_t a = 0; a < 16; ++a) {
    double acc = 0.0;
    for (uint64_t x = 0; x < 16; ++x) {
      acc += f[x] * (symplectic_inner(PauliString::from_index(n, a), PauliString::from_index(n, x)) ? -1 : 1);
    }
    CHECK(fh[a] == doctest::Approx(acc / 16.0));
  }
  auto back = symplectic_character_sum(fh, n);
  for (uint64_t i = 0; i < 16; ++i) CHECK(back[i] == doctest::Approx(f[i]));
  std::vector<double> bad(5);
  CHECK_THROWS_AS(walsh_hadamard(std::span<double>(bad)), DimensionError);
}

TEST_CASE("MUB family at n = 1 is the Z, X and Y eigenbases") {
  MubFamily m(1);
  REQUIRE(m.num_bases() == 3);
  std::set<std::string> found;
  for (uint64_t i = 0; i < 3; ++i) {
    auto g = m.subspace(i);
    REQUIRE(g.size() == 2);
    found.insert(g[1].label());
  }
  CHECK(found == std::set<std::string>{"X", "Y", "Z"});
}

TEST_CASE("MUB subspaces are Lagrangian, disjoint and unbiased") {
  for (int n = 1; n <= 3; ++n) {
    MubFamily m(n);
    const uint64_t nb = m.num_bases();
    std::set<PauliString> nonzero;
    for (uint64_t i = 0; i < nb; ++i) {
      auto g = m.subspace(i);
      CHECK(g.size() == m.dimension());
      for (const auto& x : g)
        for (const auto& y : g) CHECK(commutes(x, y));
      for (const auto& x : g)
        if (!x.is_identity()) CHECK(nonzero.insert(x).second);
    }
    CHECK(nonzero.size() == (uint64_t{1} << (2 * n)) - 1);
    std::vector<Eigen::MatrixXcd> bases;
    for (uint64_t i = 0; i < nb; ++i) bases.push_back(m.basis_matrix(i));
    const double inv = 1.0 / static_cast<double>(m.dimension());
    for (uint64_t i = 0; i < nb; ++i) {
      Eigen::MatrixXcd self = bases[i].adjoint() * bases[i];
      CHECK((self - Eigen::MatrixXcd::Identity(self.rows(), self.cols())).cwiseAbs().maxCoeff() < 1e-10);
      for (uint64_t j = i + 1; j < nb; ++j) {
        Eigen::MatrixXd ov = (bases[i].adjoint() * bases[j]).cwiseAbs2();
        CHECK((ov.array() - inv).abs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("MUB shift index matches conjugation by sigma_x") {
  for (int n = 1; n <= 2; ++n) {
    MubFamily m(n);
    for (uint64_t i = 0; i < m.num_bases(); ++i) {
      Eigen::MatrixXcd b = m.basis_matrix(i);
      for (uint64_t j = 0; j < m.dimension(); ++j) {
        CHECK(m.shift_index(i, j, PauliString(n)) == j);
        for (const auto& x : all_strings(n)) {
          uint64_t l = m.shift_index(i, j, x);
          cplx amp = b.col(static_cast<Eigen::Index>(l)).adjoint() * (pauli_matrix(x) * b.col(static_cast<Eigen::Index>(j)));
          CHECK(std::abs(amp) == doctest::Approx(1.0).epsilon(1e-12));
        }
      }
    }
  }
  // Z basis under X swaps |0> and |1>.
  MubFamily m1(1);
  for (uint64_t i = 0; i < 3; ++i) {
    if (m1.subspace(i)[1] == P("Z")) {
      CHECK(m1.shift_index(i, 0, P("X")) == 1);
      CHECK(m1.shift_index(i, 1, P("X")) == 0);
    }
  }
}

TEST_CASE("MUB projectors match their basis vectors") {
  MubFamily m(2);
  for (uint64_t i = 0; i < m.num_bases(); ++i) {
    Eigen::MatrixXcd b = m.basis_matrix(i);
    for (uint64_t j = 0; j < m.dimension(); ++j) {
      Eigen::VectorXcd v = b.col(static_cast<Eigen::Index>(j));
      Eigen::MatrixXcd outer = v * v.adjoint();
      CHECK((outer - m.projector(i, j)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("derive_seed and samplers are deterministic") {
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  Rng a(5), b(5);
  std::vector<double> p{0.2, 0.3, 0.5};
  CHECK(multinomial(a, 1000, p) == multinomial(b, 1000, p));
  auto counts = multinomial(a, 1000, p);
  CHECK(counts[0] + counts[1] + counts[2] == 1000);
  for (int i = 0; i < 100; ++i) CHECK(uniform_below(a, 7) < 7);
  CHECK(uniform_bits(a, 5) < 32);
}
