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
#include <set>

#include <gtest/gtest.h>

#include "gspcost/hamiltonian_io.hpp"
#include "gspcost/spa.hpp"

using namespace gspcost;

namespace {

QubitHamiltonian fixture(const std::string &name) {
  return load_hamiltonian(std::string(GSPCOST_DATA_DIR) + "/hamiltonians/" + name);
}

std::size_t count_role(const AnsatzSpec &spec, AnsatzGate::Role role) {
  std::size_t n = 0;
  for (const auto &g : spec.gates)
    n += g.role == role;
  return n;
}

double energy(const QubitHamiltonian &h, const StateVector &psi) {
  return psi.amplitudes().dot(to_matrix(h) * psi.amplitudes()).real();
}

OptimizeOptions seeded(std::uint64_t seed, std::size_t restarts) {
  OptimizeOptions opt;
  opt.seed = seed;
  opt.restarts = restarts;
  return opt;
}

} // namespace

TEST(BuildAnsatz, PairLayer) {
  const auto h2 = build_ansatz(4, 2, Variant::spa);
  EXPECT_EQ(h2.gates.size(), 1u);
  EXPECT_EQ(h2.gates[0].generator.kind, ExcitationGenerator::Kind::double_);
  ASSERT_EQ(h2.pairs.size(), 1u);
  EXPECT_EQ(h2.pairs[0], (ElectronPair{0, 1}));

  const auto h4 = build_ansatz(8, 4, Variant::spa);
  EXPECT_EQ(h4.gates.size(), 2u);
  EXPECT_EQ(count_role(h4, AnsatzGate::Role::pair), 2u);
  EXPECT_EQ(h4.theta.size(), h4.gates.size());
}

TEST(BuildAnsatz, GeneralizedSinglesEnumeration) {
  const auto spec = build_ansatz(4, 2, Variant::spa_gs);
  // Brute-force enumeration of same-spin ordered pairs p > q.
  std::set<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < p; ++q)
      if (p % 2 == q % 2)
        expected.insert({p, q});
  std::set<std::pair<std::size_t, std::size_t>> got;
  for (const auto &g : spec.gates)
    if (g.role == AnsatzGate::Role::single) {
      EXPECT_FALSE(g.generator.drop_z);
      got.insert({g.generator.orbitals[0], g.generator.orbitals[1]});
    }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(count_role(spec, AnsatzGate::Role::pair), 1u);
}

TEST(BuildAnsatz, SinglesVariants) {
  const auto s = build_ansatz(8, 4, Variant::spa_s);
  // 2 occupied x 2 virtual per spin.
  EXPECT_EQ(count_role(s, AnsatzGate::Role::single), 8u);
  for (const auto &g : s.gates)
    if (g.role == AnsatzGate::Role::single) {
      EXPECT_GE(g.generator.orbitals[0], 4u);
      EXPECT_LT(g.generator.orbitals[1], 4u);
    }
  const auto gas = build_ansatz(8, 4, Variant::spa_gas);
  const auto gs = build_ansatz(8, 4, Variant::spa_gs);
  ASSERT_EQ(gas.gates.size(), gs.gates.size());
  for (std::size_t k = 0; k < gas.gates.size(); ++k)
    if (gas.gates[k].role == AnsatzGate::Role::single) {
      EXPECT_TRUE(gas.gates[k].generator.drop_z);
    }
}

TEST(BuildAnsatz, Errors) {
  EXPECT_THROW(build_ansatz(4, 1, Variant::spa), InputError);
  EXPECT_THROW(build_ansatz(4, 4, Variant::spa), InputError);
  EXPECT_THROW(build_ansatz(6, 4, Variant::spa), InputError);
  EXPECT_THROW(build_ansatz(5, 2, Variant::spa), InputError);
  // Overlapping custom partition.
  EXPECT_THROW(build_ansatz(8, 4, Variant::spa, std::vector<ElectronPair>{{0, 2}, {1, 2}}), InputError);
  EXPECT_NO_THROW(build_ansatz(8, 4, Variant::spa, std::vector<ElectronPair>{{0, 3}, {1, 2}}));
}

TEST(RotationCountAnsatz, OneRotationPerPair) {
  EXPECT_EQ(rotation_count(build_ansatz(4, 2, Variant::spa)), 1u);
  for (std::size_t n : {2u, 4u, 6u, 8u})
    EXPECT_EQ(rotation_count(build_ansatz(2 * n, n, Variant::spa)), n / 2) << n;
  // Each adjacent-spin single adds its two Jordan-Wigner strings.
  EXPECT_EQ(rotation_count(build_ansatz(4, 2, Variant::spa_gs)), 1u + 2u * 2u);
}

TEST(ApplyCircuit, ZeroAnglesAreIdentity) {
  const auto spec = build_ansatz(8, 4, Variant::spa_gs);
  const auto ref = hf_state(8, 4);
  const auto out = apply_circuit(spec, spec.theta, ref);
  EXPECT_EQ(out.amplitudes(), ref.amplitudes());
}

TEST(ApplyCircuit, InverseAngleRestoresReference) {
  AnsatzSpec fwd = build_ansatz(4, 2, Variant::spa);
  const auto ref = hf_state(4, 2);
  const std::vector<double> theta{0.83}, minus{-0.83};
  const auto psi = apply_circuit(fwd, theta, ref);
  const auto back = apply_circuit(fwd, minus, psi);
  EXPECT_LE((back.amplitudes() - ref.amplitudes()).norm(), 1e-14);
}

TEST(ApplyCircuit, NormPreservedForRandomAngles) {
  const auto spec = build_ansatz(8, 4, Variant::spa_gs);
  const AnsatzCircuit circuit(spec);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> theta(spec.gates.size());
    for (auto &t : theta)
      t = angle(rng);
    Eigen::VectorXcd psi = hf_state(8, 4).amplitudes();
    for (std::size_t k = 0; k < spec.gates.size(); ++k)
      apply_generator_exponential(jordan_wigner(spec.gates[k].generator, 8), theta[k], psi);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    EXPECT_NEAR(circuit.apply(theta, hf_state(8, 4)).amplitudes().norm(), 1.0, 1e-12);
  }
}

TEST(ApplyCircuit, LengthMismatch) {
  const auto spec = build_ansatz(4, 2, Variant::spa);
  EXPECT_THROW(apply_circuit(spec, std::vector<double>{0.1, 0.2}), InputError);
}

TEST(ApplyCircuit, H2ExactAtOptimalAngle) {
  const auto h = fixture("h2_sto3g_d0.74.json");
  const auto spectrum = diagonalize(h);
  const auto spec = build_ansatz(4, 2, Variant::spa);
  const auto res = optimize(spec, h, spectrum, seeded(1, 2));
  EXPECT_GE(ground_overlap_sq(spectrum, apply_circuit(spec, res.theta)), 1.0 - 1e-8);
  EXPECT_GE(res.fidelity_sq, 1.0 - 1e-8);
}

TEST(Optimize, SeparablePairsAreExact) {
  const auto h = fixture("separable_two_pair.json");
  const auto spectrum = diagonalize(h);
  const auto res = optimize(build_ansatz(8, 4, Variant::spa), h, spectrum, seeded(3, 3));
  EXPECT_GE(res.fidelity_sq, 1.0 - 1e-6);
  EXPECT_GE(res.energy, spectrum.ground_energy - 1e-9);
  EXPECT_NEAR(res.energy, spectrum.ground_energy, 1e-8);
  EXPECT_TRUE(res.converged);
}

TEST(Optimize, FrozenReferenceWithoutParameters) {
  const QubitHamiltonian h(2, {{-1.0, PauliString("ZI")}});
  AnsatzSpec spec;
  spec.n_qubits = 2;
  spec.n_electrons = 1;
  const auto res = optimize(spec, h);
  EXPECT_DOUBLE_EQ(res.energy, 1.0);
  EXPECT_DOUBLE_EQ(res.fidelity_sq, 0.0);
  EXPECT_TRUE(res.theta.empty());
}

TEST(Optimize, MatchesGridScanOracle) {
  const auto h = fixture("h2_sto3g_d0.74.json");
  const auto spec = build_ansatz(4, 2, Variant::spa);
  // Dense angle scan, refined locally.
  double best = 1e300, best_x = 0.0;
  const int grid = 20000;
  for (int i = 0; i < grid; ++i) {
    const double x = -std::numbers::pi + 2.0 * std::numbers::pi * i / grid;
    const double e = energy(h, apply_circuit(spec, std::vector<double>{x}));
    if (e < best) {
      best = e;
      best_x = x;
    }
  }
  for (int i = -200; i <= 200; ++i) {
    const double x = best_x + i * 1e-6;
    best = std::min(best, energy(h, apply_circuit(spec, std::vector<double>{x})));
  }
  const auto res = optimize(spec, h, seeded(5, 1));
  EXPECT_NEAR(res.energy, best, 1e-6);
  EXPECT_LE(res.energy, best + 1e-12);
}

TEST(Optimize, VariationalBoundAndMonotoneVariants) {
  const auto h = fixture("h4_sto3g_d3.0.json");
  const auto spectrum = diagonalize(h);
  const auto spa = optimize(build_ansatz(8, 4, Variant::spa), h, spectrum, seeded(2, 2));
  EXPECT_GE(spa.energy, spectrum.ground_energy - 1e-9);

  const auto gs_spec = build_ansatz(8, 4, Variant::spa_gs);
  std::vector<double> start(gs_spec.gates.size(), 0.0);
  for (std::size_t k = 0; k < spa.theta.size(); ++k)
    start[k] = spa.theta[k];
  OptimizeOptions opt;
  opt.restarts = 1;
  opt.initial_theta = start;
  opt.max_sweeps = 40;
  const auto gs = optimize(gs_spec, h, spectrum, opt);
  EXPECT_GE(gs.energy, spectrum.ground_energy - 1e-9);
  EXPECT_LE(gs.energy, spa.energy + 1e-12);
  EXPECT_GE(gs.fidelity_sq, spa.fidelity_sq - 1e-9);
}

TEST(Optimize, DeterministicForFixedSeed) {
  const auto h = fixture("h4_sto3g_d3.0.json");
  const auto spec = build_ansatz(8, 4, Variant::spa_s);
  OptimizeOptions opt;
  opt.seed = 77;
  opt.restarts = 2;
  opt.max_sweeps = 10;
  const auto a = optimize(spec, h, opt);
  const auto b = optimize(spec, h, opt);
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_EQ(a.energy, b.energy);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(AnsatzSpecFile, RoundTripAndStrictKeys) {
  auto spec = build_ansatz(8, 4, Variant::spa_gas);
  for (std::size_t k = 0; k < spec.theta.size(); ++k)
    spec.theta[k] = 0.01 * static_cast<double>(k) - 0.05;
  const auto text = to_json(spec).dump();
  EXPECT_EQ(parse_ansatz(text), spec);

  auto j = to_json(spec);
  j["bogus"] = 1;
  EXPECT_THROW(parse_ansatz(j.dump()), InputError);
  auto short_theta = to_json(spec);
  short_theta["theta"] = std::vector<double>{0.0};
  EXPECT_THROW(parse_ansatz(short_theta.dump()), InputError);
  EXPECT_THROW(parse_ansatz("{"), InputError);
}
