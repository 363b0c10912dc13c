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
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gspcost/acceptability.hpp"
#include "gspcost/data.hpp"

using namespace gspcost;

namespace {

std::string data_file(const std::string &name) { return std::string(GSPCOST_DATA_DIR) + "/" + name; }

std::vector<SystemInputs> shipped_systems() {
  const auto ov = parse_overlap_data(detail::read_file(data_file("overlaps.csv")));
  const auto gsee = parse_gsee_data(detail::read_file(data_file("t_gsee.csv")));
  const auto boost = parse_booster_data(detail::read_file(data_file("booster.csv")));
  const auto rot = parse_rotation_data(detail::read_file(data_file("rotations.csv")));
  std::vector<SystemInputs> out;
  for (std::size_t i = 0; i < ov.size(); ++i) {
    SystemInputs s;
    s.label = ov[i].system;
    s.n = gsee[i].n;
    s.gamma0_sq = ov[i].gamma0_sq;
    s.gamma_spa_sq = ov[i].gamma_spa_sq;
    s.gamma_booster_sq = ov[i].gamma_booster_sq;
    s.t_gsee = gsee[i].t_gsee;
    s.t_spa = rot[i].t_spa_gs;
    s.p_succ = boost[i].p_succ;
    s.t_k1 = boost[i].t_k1;
    out.push_back(s);
  }
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

} // namespace

TEST(SpaSpeedup, Examples) {
  EXPECT_DOUBLE_EQ(spa_speedup(0.4, 0.4, 3.0), 1.0);
  EXPECT_NEAR(spa_speedup(std::sqrt(0.94), std::sqrt(0.0052), 2.0), 180.77, 0.01);
  EXPECT_NEAR(spa_speedup(std::sqrt(0.99), std::sqrt(0.63), 4.0), 2.469, 0.001);
  EXPECT_THROW(spa_speedup(0.5, 0.0, 1.0), InputError);
}

TEST(BoosterSpeedup, ReducesToPowerLawWithoutCost) {
  SpeedupInputs in;
  in.gamma = 0.9;
  in.gamma0 = 0.3;
  in.alpha = 0.5;
  in.beta = 1.5;
  in.t_gsp = 0.0;
  in.p_succ = 1.0;
  in.t_gsee = 1e6;
  EXPECT_NEAR(booster_speedup(in), spa_speedup(0.9, 0.3, 2.0), 1e-12);
  in.gamma = in.gamma0;
  EXPECT_NEAR(booster_speedup(in), 1.0, 1e-14);
}

TEST(BoosterSpeedup, H4Example) {
  SpeedupInputs in;
  in.gamma = 1.0;
  in.gamma0 = std::sqrt(0.0375);
  in.alpha = 0.0;
  in.beta = 1.0;
  in.t_gsee = 1.3e7;
  in.t_gsp = 1.1e7;
  in.p_succ = 0.027;
  in.eps_tilde = 1.6e-3;
  // Hand evaluation of the ratio.
  const double num = 1.3e7 / (1.6e-3 * 0.19364916731037085);
  const double den = 1.1e7 / 0.027 + 1.3e7 / 1.6e-3;
  EXPECT_NEAR(booster_speedup(in), num / den, 1e-12 * num / den);
  EXPECT_NEAR(booster_speedup(in), 4.9, 0.05);
}

TEST(BoosterSpeedup, Errors) {
  SpeedupInputs in;
  in.p_succ = 0.0;
  EXPECT_THROW(booster_speedup(in), InputError);
  in = {};
  in.gamma0 = 0.0;
  EXPECT_THROW(booster_speedup(in), InputError);
  in = {};
  in.eps_tilde = 0.0;
  EXPECT_THROW(booster_speedup(in), InputError);
}

TEST(MeasurementReduction, Examples) {
  EXPECT_DOUBLE_EQ(measurement_reduction(1.6e-3, 1.6e-3), 1.0);
  EXPECT_NEAR(measurement_reduction(17.9e-3, 1.6e-3), 125.16, 0.01);
  EXPECT_NEAR(measurement_reduction(3.2e-3, 1.6e-3), 4.0, 1e-12);
  EXPECT_THROW(measurement_reduction(1e-3, 1.6e-3), InputError);
}

TEST(FormulaProperties, RandomTuples) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> overlap(1e-3, 1.0), expo(0.0, 3.0), logc(2.0, 9.0), prob(1e-4, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double g = overlap(rng), g0 = overlap(rng), p = expo(rng), q = expo(rng);
    EXPECT_LE(rel(spa_speedup(g, g0, p + q), spa_speedup(g, g0, p) * spa_speedup(g, g0, q)), 1e-12);

    SpeedupInputs in;
    in.gamma = g;
    in.gamma0 = g0;
    in.alpha = p;
    in.beta = q;
    in.t_gsee = std::pow(10.0, logc(rng));
    in.t_gsp = std::pow(10.0, logc(rng));
    in.p_succ = prob(rng);
    in.eps_tilde = std::pow(10.0, -logc(rng) / 3.0);
    const double base = booster_speedup(in);

    SpeedupInputs scaled = in;
    const double c = std::pow(10.0, expo(rng));
    scaled.t_gsee *= c;
    scaled.t_gsp *= c;
    EXPECT_LE(rel(booster_speedup(scaled), base), 1e-12);

    SpeedupInputs better = in;
    better.p_succ = std::min(1.0, in.p_succ * 2.0);
    EXPECT_GE(booster_speedup(better), base * (1.0 - 1e-14));
    SpeedupInputs costlier = in;
    costlier.t_gsp *= 2.0;
    EXPECT_LE(booster_speedup(costlier), base * (1.0 + 1e-14));

    SpeedupInputs limit = in;
    limit.t_gsp = in.t_gsee * 1e-15;
    limit.p_succ = 1.0;
    EXPECT_LE(rel(booster_speedup(limit), spa_speedup(g, g0, p + q)), 1e-9);
  }
}

TEST(Report, EmptyInput) { EXPECT_TRUE(acceptability_report({}).empty()); }

TEST(Report, RowLayout) {
  const auto rows = acceptability_report(shipped_systems());
  // 3 SPA rows + 3 sums x 2 policies per system.
  ASSERT_EQ(rows.size(), 4u * 9u);
  EXPECT_EQ(rows[0].method, "SPA+X");
  EXPECT_EQ(rows[3].method, "booster");
  EXPECT_EQ(rows[3].k_policy, "K=10");
  EXPECT_EQ(rows[4].k_policy, "K=100sqrt(n)");
  EXPECT_EQ(rows[4].trotter_steps, 142u);
  for (const auto &r : rows) {
    EXPECT_EQ(r.alpha, 0.0);
    EXPECT_EQ(r.eps_tilde, 1.6e-3);
  }
}

TEST(Report, SpaRowsAllAccepted) {
  for (const auto &r : acceptability_report(shipped_systems()))
    if (r.method == "SPA+X") {
      EXPECT_TRUE(r.accepted) << r.system << " sum " << r.alpha + r.beta << " ratio " << r.ratio;
      EXPECT_TRUE(r.regime_ok) << r.system;
    }
}

TEST(Report, BoosterRowsAcceptedAtTenSteps) {
  for (const auto &r : acceptability_report(shipped_systems())) {
    if (r.method == "booster" && r.k_policy == "K=10") {
      EXPECT_TRUE(r.accepted) << r.system << " sum " << r.alpha + r.beta << " ratio " << r.ratio;
    }
  }
}

TEST(Report, MissingInputRow) {
  auto systems = shipped_systems();
  systems[1].p_succ = 0.0;
  EXPECT_THROW(acceptability_report(systems), InputError);
}
