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
#pragma once
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "gspcost/error.hpp"
#include "gspcost/resources.hpp"

namespace gspcost {

/// Amplitude overlaps (not squared) and T-counts entering the speed-up
/// formulas.
struct SpeedupInputs {
  double gamma = 1.0;
  double gamma0 = 1.0;
  double alpha = 0.0;
  double beta = 1.0;
  double t_gsp = 0.0;
  double t_gsee = 1.0;
  double p_succ = 1.0;
  double eps_tilde = 1.6e-3;

  void validate() const {
    detail::require(gamma0 > 0.0 && gamma0 <= 1.0, "HF overlap gamma0 must lie in (0, 1]");
    detail::require(gamma > 0.0 && gamma <= 1.0, "overlap gamma must lie in (0, 1]");
    detail::require(alpha >= 0.0 && beta >= 0.0, "exponents alpha and beta must be non-negative");
    detail::require(eps_tilde > 0.0, "target accuracy must be positive");
    detail::require(p_succ > 0.0 && p_succ <= 1.0, "success probability must lie in (0, 1]");
    detail::require(t_gsp >= 0.0 && t_gsee > 0.0, "T-counts must be non-negative (T_GSEE positive)");
  }
};

/// (gamma / gamma0)^(alpha + beta); valid while T_GSP is negligible next to T_GSEE.
inline double spa_speedup(double gamma, double gamma0, double exponent_sum) {
  detail::require(gamma0 > 0.0 && gamma0 <= 1.0, "HF overlap gamma0 must lie in (0, 1]");
  detail::require(gamma > 0.0 && gamma <= 1.0, "overlap gamma must lie in (0, 1]");
  detail::require(exponent_sum >= 0.0, "exponent sum must be non-negative");
  return std::pow(gamma / gamma0, exponent_sum);
}

/// The power-law ratio only holds when the preparation is cheap.
inline bool negligible_preparation(double t_gsp, double t_gsee) { return t_gsp <= 0.01 * t_gsee; }

/// Runtime ratio of HF-seeded over booster-seeded estimation:
///
///   [T_GSEE / (eps gamma0^(a+b))] / [gamma^-a (T_B / P_succ + T_GSEE / (eps gamma^b))]
///
/// with T_GSP playing the role of T_B.
inline double booster_speedup(const SpeedupInputs &in) {
  in.validate();
  const double hf = in.t_gsee / (in.eps_tilde * std::pow(in.gamma0, in.alpha + in.beta));
  const double boosted = (in.t_gsp / in.p_succ + in.t_gsee / (in.eps_tilde * std::pow(in.gamma, in.beta))) /
                         std::pow(in.gamma, in.alpha);
  return hf / boosted;
}

/// Sampling reduction M0 / M = (eps / eps0)^2 when the accuracy target loosens
/// from eps0 to eps.
inline double measurement_reduction(double eps, double eps0) {
  detail::require(eps0 > 0.0 && eps >= eps0, "measurement reduction needs eps >= eps0 > 0");
  const double r = eps / eps0;
  return r * r;
}

/// Per-system inputs of the acceptability report; overlaps are squared values.
struct SystemInputs {
  std::string label;
  std::size_t n = 0;
  double gamma0_sq = 0.0;
  double gamma_spa_sq = 0.0;
  double gamma_booster_sq = 0.0;
  double t_gsee = 0.0;
  /// T-count of the SPA-variant circuit used for the negligible-cost check.
  double t_spa = 0.0;
  double p_succ = 0.0;
  double t_k1 = 0.0;
  std::string provenance = "ingested-paper-datum";
};

struct ReportConfig {
  double eps_tilde = 1.6e-3;
  std::vector<double> exponent_sums{1.0, 2.0, 4.0};
  /// alpha = alpha_fraction * (alpha + beta).
  double alpha_fraction = 0.0;
  double depth = 10.0;
  std::vector<TrotterPolicy> policies{{TrotterPolicy::Mode::fixed, 10}, {TrotterPolicy::Mode::sqrt_scaled, 10}};
};

struct SpeedupRow {
  std::string system;
  std::string method;
  double alpha = 0.0;
  double beta = 0.0;
  double eps_tilde = 0.0;
  std::string k_policy;
  std::size_t trotter_steps = 0;
  double ratio = 0.0;
  bool accepted = false;
  /// False when the SPA formula was applied outside its cheap-preparation regime.
  bool regime_ok = true;
  std::string provenance;
};

/// SPA rows for every exponent sum, then booster rows for every (sum, policy).
inline std::vector<SpeedupRow> acceptability_report(const std::vector<SystemInputs> &systems,
                                                    const ReportConfig &cfg = {}) {
  detail::require(cfg.alpha_fraction >= 0.0 && cfg.alpha_fraction <= 1.0, "alpha fraction must lie in [0, 1]");
  std::vector<SpeedupRow> rows;
  for (const auto &sys : systems) {
    detail::require(sys.gamma0_sq > 0.0 && sys.gamma_spa_sq > 0.0 && sys.gamma_booster_sq > 0.0 &&
                        sys.t_gsee > 0.0 && sys.p_succ > 0.0,
                    "incomplete acceptability inputs for system " + sys.label);
    const double gamma0 = std::sqrt(sys.gamma0_sq);
    for (double sum : cfg.exponent_sums) {
      SpeedupRow r;
      r.system = sys.label;
      r.method = "SPA+X";
      r.alpha = cfg.alpha_fraction * sum;
      r.beta = sum - r.alpha;
      r.eps_tilde = cfg.eps_tilde;
      r.k_policy = "n/a";
      r.ratio = spa_speedup(std::sqrt(sys.gamma_spa_sq), gamma0, sum);
      r.accepted = r.ratio > 1.0;
      r.regime_ok = negligible_preparation(sys.t_spa, sys.t_gsee);
      r.provenance = "computed";
      rows.push_back(std::move(r));
    }
    for (double sum : cfg.exponent_sums)
      for (const auto &policy : cfg.policies) {
        SpeedupInputs in;
        in.gamma = std::sqrt(sys.gamma_booster_sq);
        in.gamma0 = gamma0;
        in.alpha = cfg.alpha_fraction * sum;
        in.beta = sum - in.alpha;
        in.eps_tilde = cfg.eps_tilde;
        in.p_succ = sys.p_succ;
        in.t_gsee = sys.t_gsee;
        const std::size_t k = policy.steps(sys.n);
        in.t_gsp = booster_t_count(cfg.depth, static_cast<double>(k), sys.t_k1);
        SpeedupRow r;
        r.system = sys.label;
        r.method = "booster";
        r.alpha = in.alpha;
        r.beta = in.beta;
        r.eps_tilde = in.eps_tilde;
        r.k_policy = policy.label();
        r.trotter_steps = k;
        r.ratio = booster_speedup(in);
        r.accepted = r.ratio > 1.0;
        r.provenance = "computed";
        rows.push_back(std::move(r));
      }
  }
  return rows;
}

} // namespace gspcost
