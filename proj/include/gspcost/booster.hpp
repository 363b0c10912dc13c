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
#include <optional>
#include <string>

#include "gspcost/error.hpp"
#include "gspcost/pauli.hpp"
#include "gspcost/spectral.hpp"

namespace gspcost {

enum class EvolutionBackend { exact, trotter };

inline std::string to_string(EvolutionBackend b) { return b == EvolutionBackend::exact ? "exact" : "trotter"; }

inline EvolutionBackend parse_backend(const std::string &name) {
  if (name == "exact")
    return EvolutionBackend::exact;
  if (name == "trotter")
    return EvolutionBackend::trotter;
  throw InputError("unknown evolution backend: " + name);
}

/// Gaussian filter exp(-a x^2) realized through a truncated Fourier sum with
/// depth proxy `depth` (D) and 2N grid points.
struct BoosterConfig {
  double a = 1.0;
  double depth = 10.0;
  std::size_t n_points = 200;
  /// Spectral shift; the exact ground energy when unset.
  std::optional<double> shift;
  EvolutionBackend backend = EvolutionBackend::exact;
  std::size_t trotter_steps = 1;

  void validate() const {
    detail::require(a > 0.0 && std::isfinite(a), "booster width a must be positive");
    detail::require(depth > 0.0 && std::isfinite(depth), "booster depth proxy D must be positive");
    detail::require(n_points >= 1, "booster discretization N must be at least 1");
    detail::require(trotter_steps >= 1, "Trotter step count K must be at least 1");
  }
};

struct BoostResult {
  StateVector state;
  double p_succ = 0.0;
  double depth_proxy = 0.0;
  double overlap_sq = 0.0;
};

/// Width with exp(-a gap^2) = 1e-3 on the first excited component.
inline double default_width(double gap) {
  detail::require(gap > 0.0, "default booster width needs a positive spectral gap");
  return std::log(1e3) / (gap * gap);
}

inline double gaussian_filter(double x, double a) { return std::exp(-a * x * x); }

/// Grid point xi_j = (j + 1/2) D / N.
inline double fourier_node(long j, double depth, std::size_t n_points) {
  return (static_cast<double>(j) + 0.5) * depth / static_cast<double>(n_points);
}

/// Weight (D/N) sqrt(pi/a) exp(-(pi xi)^2 / a) of node xi.
inline double fourier_weight(double xi, double a, double depth, std::size_t n_points) {
  const double pi = std::numbers::pi;
  return depth / static_cast<double>(n_points) * std::sqrt(pi / a) * std::exp(-(pi * xi) * (pi * xi) / a);
}

/// f_{D,N;a}(x), summed over j = -N .. N-1 in ascending order.
inline Complex fourier_filter(double x, double a, double depth, std::size_t n_points) {
  Complex sum = 0.0;
  const auto n = static_cast<long>(n_points);
  for (long j = -n; j < n; ++j) {
    const double xi = fourier_node(j, depth, n_points);
    sum += fourier_weight(xi, a, depth, n_points) * std::polar(1.0, 2.0 * std::numbers::pi * x * xi);
  }
  return sum;
}

/// (prod_terms exp(2 pi i c P t / K))^K |psi>, terms in canonical order.
inline StateVector trotter_evolve(const QubitHamiltonian &h, const StateVector &psi, double t, std::size_t steps) {
  detail::require(steps >= 1, "Trotter step count K must be at least 1");
  detail::require(psi.n_qubits() == h.n_qubits(), "state and Hamiltonian act on different registers");
  Eigen::VectorXcd v = psi.amplitudes();
  const double scale = 2.0 * std::numbers::pi * t / static_cast<double>(steps);
  if (t != 0.0)
    for (std::size_t k = 0; k < steps; ++k)
      for (const auto &term : h.terms())
        apply_pauli_rotation(term.string, scale * term.coeff.real(), v);
  return StateVector::normalized(h.n_qubits(), std::move(v));
}

namespace detail {

// Needs the eigendecomposition: full diagonalization of small registers.
inline SpectralData full_spectrum(const QubitHamiltonian &h, const SpectralData *given) {
  if (given && given->eigenvectors)
    return *given;
  DiagonalizeOptions opt;
  opt.full = true;
  return diagonalize(h, opt);
}

inline BoostResult finish_boost(Eigen::VectorXcd filtered, const SpectralData &spectrum, double depth_proxy) {
  const double p = filtered.squaredNorm();
  if (!(p > 1e-300))
    throw ComputationError("booster output vanished: the initial state has no weight on the filtered region");
  BoostResult out;
  out.state = StateVector::normalized(spectrum.n_qubits, std::move(filtered));
  out.p_succ = p;
  out.depth_proxy = depth_proxy;
  out.overlap_sq = ground_overlap_sq(spectrum, out.state);
  return out;
}

} // namespace detail

/// exp(-a (H - mu)^2) |psi> through the full spectral decomposition; p_succ
/// is <psi| f^2 |psi>.
inline BoostResult gaussian_exact(const QubitHamiltonian &h, const StateVector &psi, double a,
                                  std::optional<double> shift = std::nullopt,
                                  const SpectralData *spectrum = nullptr) {
  detail::require(a > 0.0 && std::isfinite(a), "booster width a must be positive");
  detail::require(psi.n_qubits() == h.n_qubits(), "state and Hamiltonian act on different registers");
  const SpectralData s = detail::full_spectrum(h, spectrum);
  const double mu = shift.value_or(s.ground_energy);
  const Eigen::MatrixXcd &v = *s.eigenvectors;
  Eigen::VectorXcd c = v.adjoint() * psi.amplitudes();
  for (Eigen::Index k = 0; k < c.size(); ++k)
    c[k] *= gaussian_filter((*s.eigenvalues)[k] - mu, a);
  return detail::finish_boost(v * c, s, 0.0);
}

/// f_{D,N;a}(H - mu) |psi> with each exp(2 pi i (H - mu) xi_j) from the
/// configured backend. Branches are accumulated in ascending j.
inline BoostResult gaussian_fourier(const QubitHamiltonian &h, const StateVector &psi, const BoosterConfig &cfg,
                                    const SpectralData *spectrum = nullptr) {
  cfg.validate();
  detail::require(psi.n_qubits() == h.n_qubits(), "state and Hamiltonian act on different registers");
  const auto n = static_cast<long>(cfg.n_points);
  const double two_pi = 2.0 * std::numbers::pi;

  if (cfg.backend == EvolutionBackend::exact) {
    const SpectralData s = detail::full_spectrum(h, spectrum);
    const double mu = cfg.shift.value_or(s.ground_energy);
    const Eigen::MatrixXcd &v = *s.eigenvectors;
    const Eigen::VectorXcd c = v.adjoint() * psi.amplitudes();
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(c.size());
    for (long j = -n; j < n; ++j) {
      const double xi = fourier_node(j, cfg.depth, cfg.n_points);
      const double w = fourier_weight(xi, cfg.a, cfg.depth, cfg.n_points);
      for (Eigen::Index k = 0; k < c.size(); ++k)
        acc[k] += w * std::polar(1.0, two_pi * ((*s.eigenvalues)[k] - mu) * xi) * c[k];
    }
    return detail::finish_boost(v * acc, s, 2.0 * cfg.depth);
  }

  // Trotter backend: only the ground space is needed for the overlap report.
  const SpectralData s = spectrum ? *spectrum : diagonalize(h);
  const double mu = cfg.shift.value_or(s.ground_energy);
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(psi.amplitudes().size());
  for (long j = -n; j < n; ++j) {
    const double xi = fourier_node(j, cfg.depth, cfg.n_points);
    const double w = fourier_weight(xi, cfg.a, cfg.depth, cfg.n_points);
    const StateVector evolved = trotter_evolve(h, psi, xi, cfg.trotter_steps);
    acc += (w * std::polar(1.0, -two_pi * mu * xi)) * evolved.amplitudes();
  }
  return detail::finish_boost(std::move(acc), s, 2.0 * cfg.depth);
}

} // namespace gspcost
