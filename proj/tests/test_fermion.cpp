/*
 * Copyright (c) 2026 The gspcost Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gspcost/fermion.hpp"
#include "oracles.hpp"

using namespace gspcost;

namespace {

Eigen::MatrixXcd generator_oracle(const ExcitationGenerator &g, std::size_t n) {
  const auto &o = g.orbitals;
  Eigen::MatrixXcd t;
  if (g.kind == ExcitationGenerator::Kind::single)
    t = oracle::creation(n, o[0]) * oracle::annihilation(n, o[1]);
  else
    t = oracle::creation(n, o[0]) * oracle::creation(n, o[1]) * oracle::annihilation(n, o[2]) *
        oracle::annihilation(n, o[3]);
  return t - t.adjoint();
}

std::vector<ExcitationGenerator> sample_generators() {
  return {ExcitationGenerator::single(1, 0),       ExcitationGenerator::single(3, 0),
          ExcitationGenerator::single(2, 0, true), ExcitationGenerator::single(0, 3, true),
          ExcitationGenerator::double_(2, 3, 1, 0), ExcitationGenerator::double_(3, 1, 2, 0),
          ExcitationGenerator::double_(4, 5, 1, 0)};
}

} // namespace

TEST(JordanWigner, LadderProductMatchesOccupationOracle) {
  const std::size_t n = 3;
  for (std::size_t p = 0; p < n; ++p) {
    const std::vector<Ladder> create{{p, true}};
    EXPECT_LE((oracle::dense_sum(n, jw_product(n, create).terms()) - oracle::creation(n, p)).norm(), 1e-14);
  }
}

TEST(JordanWigner, NumberOperator) {
  const std::vector<Ladder> ops{{0, true}, {0, false}};
  const auto terms = jw_product(2, ops).terms();
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].string.letters(), "II");
  EXPECT_NEAR(std::abs(terms[0].coeff - Complex(0.5)), 0.0, 1e-15);
  EXPECT_EQ(terms[1].string.letters(), "ZI");
  EXPECT_NEAR(std::abs(terms[1].coeff - Complex(-0.5)), 0.0, 1e-15);
}

// a_1^dagger a_0 - a_0^dagger a_1 on two qubits. With a^dagger = (X - iY)/2 the
// decomposition is (i/2)(Y0 X1 - X0 Y1); the occupation oracle fixes the sign.
TEST(JordanWigner, AdjacentSingle) {
  const auto g = ExcitationGenerator::single(1, 0);
  const auto terms = jordan_wigner(g, 2);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].string.letters(), "XY");
  EXPECT_NEAR(std::abs(terms[0].coeff - Complex(0.0, -0.5)), 0.0, 1e-15);
  EXPECT_EQ(terms[1].string.letters(), "YX");
  EXPECT_NEAR(std::abs(terms[1].coeff - Complex(0.0, 0.5)), 0.0, 1e-15);

  const Eigen::MatrixXcd m = oracle::dense_sum(2, terms);
  EXPECT_LE((m - generator_oracle(g, 2)).norm(), 1e-14);
  EXPECT_LE((m + m.adjoint()).norm(), 1e-15);
  // |10> (orbital 0 filled, index 2) -> |01> (index 1).
  Eigen::VectorXcd ten = Eigen::VectorXcd::Zero(4);
  ten[2] = 1.0;
  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(4);
  expected[1] = 1.0;
  EXPECT_LE((m * ten - expected).norm(), 1e-15);
}

TEST(JordanWigner, DropZReplacesParityString) {
  const auto plain = jordan_wigner(ExcitationGenerator::single(2, 0, false), 3);
  const auto gas = jordan_wigner(ExcitationGenerator::single(2, 0, true), 3);
  ASSERT_EQ(plain.size(), gas.size());
  for (std::size_t k = 0; k < plain.size(); ++k) {
    std::string expected = plain[k].string.letters();
    ASSERT_EQ(expected[1], 'Z');
    expected[1] = 'I';
    EXPECT_EQ(gas[k].string.letters(), expected);
    EXPECT_EQ(gas[k].coeff, plain[k].coeff);
  }
}

TEST(JordanWigner, MatchesOccupationOracle) {
  for (const auto &g : sample_generators()) {
    if (g.drop_z)
      continue;
    const std::size_t n = 6;
    EXPECT_LE((oracle::dense_sum(n, jordan_wigner(g, n)) - generator_oracle(g, n)).norm(), 1e-13);
  }
}

TEST(JordanWigner, IndexErrors) {
  EXPECT_THROW(jordan_wigner(ExcitationGenerator::single(2, 0), 2), InputError);
  EXPECT_THROW(jordan_wigner(ExcitationGenerator::single(1, 1), 2), InputError);
  EXPECT_THROW(jordan_wigner(ExcitationGenerator::double_(0, 1, 1, 2), 4), InputError);
}

// exp(theta G) is unitary and reproduces the dense exponential.
TEST(JordanWigner, ExponentialIsUnitary) {
  const std::size_t n = 6;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (const auto &g : sample_generators()) {
    const auto terms = jordan_wigner(g, n);
    const Eigen::MatrixXcd dense = oracle::dense_sum(n, terms);
    EXPECT_LE((dense + dense.adjoint()).norm(), 1e-14);
    for (double theta : {0.1, 0.7, std::numbers::pi / 3}) {
      const Eigen::MatrixXcd u = oracle::expm(theta * dense);
      const Eigen::Index dim = u.rows();
      EXPECT_LE((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-12);

      Eigen::VectorXcd v(dim);
      for (auto &x : v)
        x = Complex(normal(rng), normal(rng));
      v.normalize();
      Eigen::VectorXcd w = v;
      apply_generator_exponential(terms, theta, w);
      EXPECT_LE((w - u * v).norm(), 1e-12);
      EXPECT_NEAR(w.norm(), 1.0, 1e-12);
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(Eigen::Index{1} << n);
    const Eigen::VectorXcd before = v;
    apply_generator_exponential(terms, 0.0, v);
    EXPECT_EQ(v, before);
  }
}

TEST(JordanWigner, NonCommutingFallback) {
  // i(X + Z)/sqrt(2) has non-commuting strings; compare against the dense exponential.
  const double c = 1.0 / std::sqrt(2.0);
  const std::vector<PauliTerm> terms{{Complex(0.0, c), PauliString("X")}, {Complex(0.0, c), PauliString("Z")}};
  ASSERT_FALSE(mutually_commuting(terms));
  Eigen::VectorXcd v(2);
  v << 0.6, Complex(0.0, 0.8);
  Eigen::VectorXcd w = v;
  apply_generator_exponential(terms, 1.3, w);
  EXPECT_LE((w - oracle::expm(1.3 * oracle::dense_sum(1, terms)) * v).norm(), 1e-12);
}

TEST(RotationCount, EmptyAndSingle) {
  EXPECT_EQ(rotation_count(std::vector<PauliTerm>{}), 0u);
  EXPECT_EQ(rotation_count(jordan_wigner(ExcitationGenerator::single(1, 0), 2)), 2u);
  const std::vector<PauliTerm> with_identity{{1.0, PauliString("II")}, {1.0, PauliString("XI")}};
  EXPECT_EQ(rotation_count(with_identity), 1u);
}

TEST(RotationCount, AdditiveOverConcatenation) {
  const auto gens = sample_generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto a = jordan_wigner(gens[i], 6);
      const auto b = jordan_wigner(gens[j], 6);
      const std::size_t ra = rotation_count(a), rb = rotation_count(b);
      a.insert(a.end(), b.begin(), b.end());
      EXPECT_EQ(rotation_count(a), ra + rb);
    }
}
