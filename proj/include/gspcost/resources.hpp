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
#include <numbers>
#include <string>

#include "gspcost/error.hpp"
#include "gspcost/pauli.hpp"

namespace gspcost {

enum class LogBase { natural, base2 };

inline std::string to_string(LogBase b) { return b == LogBase::natural ? "natural" : "base2"; }

inline LogBase parse_log_base(const std::string &name) {
  if (name == "natural")
    return LogBase::natural;
  if (name == "base2")
    return LogBase::base2;
  throw InputError("unknown log base: " + name);
}

/// delta = delta_C / R, from delta_C = 1 - (1 - delta)^R ~ R delta.
inline double per_gate_precision(double delta_c, std::size_t rotations) {
  detail::require(delta_c > 0.0 && delta_c < 1.0, "circuit failure tolerance must lie in (0, 1)");
  detail::require(rotations >= 1, "per-gate precision is undefined for an empty circuit");
  return delta_c / static_cast<double>(rotations);
}

/// 3 R log(1/delta).
inline double t_count(double rotations, double delta, LogBase base = LogBase::natural) {
  detail::require(rotations >= 0.0, "rotation count must be non-negative");
  detail::require(delta > 0.0 && delta < 1.0, "per-gate precision must lie in (0, 1)");
  const double log_inv = base == LogBase::natural ? std::log(1.0 / delta) : std::log2(1.0 / delta);
  return 3.0 * rotations * log_inv;
}

inline long long round_half_up(double x) { return static_cast<long long>(std::floor(x + 0.5)); }

inline double toffoli_to_t(double toffolis) {
  detail::require(toffolis >= 0.0, "Toffoli count must be non-negative");
  return 4.0 * toffolis;
}

/// T_B = 2 D K T_{K=1}.
inline double booster_t_count(double depth, double trotter_steps, double t_k1) {
  detail::require(depth > 0.0, "depth proxy D must be positive");
  detail::require(trotter_steps >= 1.0, "Trotter step count K must be at least 1");
  detail::require(t_k1 >= 0.0, "single-step T-count must be non-negative");
  return 2.0 * depth * trotter_steps * t_k1;
}

/// Longest evolution time of the booster expansion, pi D / gap.
inline double max_sim_time(double depth, double gap) {
  detail::require(gap > 0.0, "maximal simulation time needs a positive spectral gap");
  return std::numbers::pi * depth / gap;
}

/// Trotter steps: a fixed K0, or K0 * 10 * sqrt(n) rounded up.
struct TrotterPolicy {
  enum class Mode { fixed, sqrt_scaled };
  Mode mode = Mode::fixed;
  std::size_t k0 = 10;

  std::size_t steps(std::size_t system_size) const {
    if (mode == Mode::fixed)
      return k0;
    return static_cast<std::size_t>(std::ceil(static_cast<double>(k0) * 10.0 *
                                              std::sqrt(static_cast<double>(system_size)) - 1e-9));
  }

  std::string label() const {
    return mode == Mode::fixed ? "K=" + std::to_string(k0) : "K=" + std::to_string(k0 * 10) + "sqrt(n)";
  }
};

inline TrotterPolicy::Mode parse_trotter_mode(const std::string &name) {
  if (name == "fixed")
    return TrotterPolicy::Mode::fixed;
  if (name == "sqrt_scaled")
    return TrotterPolicy::Mode::sqrt_scaled;
  throw InputError("unknown Trotter policy: " + name);
}

struct ResourceEstimate {
  std::size_t rotations = 0;
  double delta_c = 0.0;
  double delta = 0.0;
  LogBase log_base = LogBase::natural;
  double t_count = 0.0;

  long long t_count_rounded() const { return round_half_up(t_count); }
};

/// R rotations under failure tolerance delta_C; the empty circuit costs nothing.
inline ResourceEstimate estimate(std::size_t rotations, double delta_c, LogBase base = LogBase::natural) {
  ResourceEstimate e;
  e.rotations = rotations;
  e.delta_c = delta_c;
  e.log_base = base;
  if (rotations == 0) {
    detail::require(delta_c > 0.0 && delta_c < 1.0, "circuit failure tolerance must lie in (0, 1)");
    e.delta = delta_c;
    return e;
  }
  e.delta = per_gate_precision(delta_c, rotations);
  e.t_count = t_count(static_cast<double>(rotations), e.delta, base);
  return e;
}

/// Rotations in one first-order Trotter step of exp(iHt): one per
/// non-identity term.
inline std::size_t trotter_step_rotations(const QubitHamiltonian &h) { return h.non_identity_terms(); }

} // namespace gspcost
