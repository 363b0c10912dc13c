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
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "gspcost/error.hpp"
#include "gspcost/pauli.hpp"

namespace gspcost {

/// Normalized amplitude vector on n qubits (big-endian basis order).
class StateVector {
public:
  static constexpr double kNormTolerance = 1e-10;

  StateVector() = default;

  StateVector(std::size_t n_qubits, Eigen::VectorXcd amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    detail::require(n_qubits >= 1 && n_qubits <= 30, "state register size out of range");
    detail::require(amplitudes_.size() == (Eigen::Index{1} << n_qubits),
                    "amplitude vector length is not 2^n_qubits");
    detail::require(std::abs(amplitudes_.norm() - 1.0) <= kNormTolerance,
                    "state vector is not normalized");
  }

  /// Rescales `amplitudes` to unit norm first; throws ComputationError on a
  /// zero vector.
  static StateVector normalized(std::size_t n_qubits, Eigen::VectorXcd amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw ComputationError("cannot normalize a zero or non-finite state");
    amplitudes /= norm;
    return StateVector(n_qubits, std::move(amplitudes));
  }

  static StateVector basis(std::size_t n_qubits, std::uint64_t index) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
    detail::require(index < static_cast<std::uint64_t>(v.size()), "basis index out of range");
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(n_qubits, std::move(v));
  }

  std::size_t n_qubits() const { return n_qubits_; }
  const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }

private:
  std::size_t n_qubits_ = 0;
  Eigen::VectorXcd amplitudes_;
};

/// Computational-basis state with spin orbitals 0 .. n_electrons-1 occupied.
inline StateVector hf_state(std::size_t n_qubits, std::size_t n_electrons) {
  detail::require(n_electrons <= n_qubits, "electron count " + std::to_string(n_electrons) +
                                               " exceeds " + std::to_string(n_qubits) +
                                               " spin orbitals");
  const std::uint64_t occupied = (std::uint64_t{1} << n_electrons) - 1;
  return StateVector::basis(n_qubits, occupied << (n_qubits - n_electrons));
}

/// |<a|b>|^2.
inline double overlap_sq(const StateVector &a, const StateVector &b) {
  detail::require(a.n_qubits() == b.n_qubits(), "overlap of states on different registers");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

struct SpectralData {
  std::size_t n_qubits = 0;
  double ground_energy = 0.0;
  StateVector ground_state;
  /// E1 - E0 counting multiplicity; zero (within tolerance) for a degenerate
  /// ground space.
  double gap = 0.0;
  /// Distance from E0 to the first eigenvalue outside the ground space.
  double excitation_gap = 0.0;
  double residual = 0.0;
  bool degenerate = false;
  /// Orthonormal basis of the ground space, one column per state.
  Eigen::MatrixXcd ground_space;
  std::optional<Eigen::VectorXd> eigenvalues;
  std::optional<Eigen::MatrixXcd> eigenvectors;
};

/// Weight of `psi` in the ground space: the plain squared overlap when the
/// ground state is unique, the projector expectation otherwise.
inline double ground_overlap_sq(const SpectralData &spectrum, const StateVector &psi) {
  detail::require(psi.n_qubits() == spectrum.n_qubits, "state and spectrum differ in register size");
  return (spectrum.ground_space.adjoint() * psi.amplitudes()).squaredNorm();
}

struct DiagonalizeOptions {
  bool full = false;
  std::size_t qubit_cap = kDefaultQubitCap;
  /// Registers up to this size use a dense Hermitian solver.
  std::size_t dense_max_qubits = 12;
  double degeneracy_tol = 1e-10;
  std::size_t krylov_dim = 80;
  std::size_t max_restarts = 400;
  /// Upper bound on the ground-space dimension probed by the iterative path.
  std::size_t max_ground_multiplicity = 32;
};

namespace detail {

inline double residual_bound(const QubitHamiltonian &h) {
  return 1e-9 * std::max(1.0, h.coefficient_norm());
}

struct EigenPair {
  double value;
  Eigen::VectorXcd vector;
};

inline void orthogonalize(Eigen::VectorXcd &w, const std::vector<Eigen::VectorXcd> &basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto &b : basis)
      w -= b * b.dot(w);
}

// Lowest eigenpair of `m` restricted to the orthogonal complement of `locked`.
// Explicitly restarted Lanczos with full reorthogonalization.
inline EigenPair lanczos_lowest(const SparseMatrix &m, const std::vector<Eigen::VectorXcd> &locked,
                                const DiagonalizeOptions &opt, double tol, std::uint64_t seed) {
  const Eigen::Index dim = m.rows();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd start(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    start[i] = Complex{normal(rng), normal(rng)};

  const auto space = static_cast<std::size_t>(dim) - locked.size();
  const std::size_t krylov = std::max<std::size_t>(2, std::min(opt.krylov_dim, space));
  EigenPair best{0.0, {}};
  double residual = 0.0;

  for (std::size_t restart = 0; restart < opt.max_restarts; ++restart) {
    orthogonalize(start, locked);
    double nrm = start.norm();
    if (nrm == 0.0)
      throw ComputationError("Lanczos start vector collapsed under deflation");
    std::vector<Eigen::VectorXcd> v{start / nrm};
    std::vector<double> alpha, beta;
    for (std::size_t j = 0; j < krylov; ++j) {
      Eigen::VectorXcd w = m * v[j];
      alpha.push_back(v[j].dot(w).real());
      orthogonalize(w, locked);
      orthogonalize(w, v);
      const double b = w.norm();
      if (j + 1 == krylov || b < 1e-13)
        break;
      beta.push_back(b);
      v.push_back(w / b);
    }
    const auto k = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
    Eigen::VectorXd sub = k > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1))
                                : Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    if (k > 1) {
      tri.computeFromTridiagonal(diag, sub);
    } else {
      tri.compute(diag.asDiagonal().toDenseMatrix());
    }
    const Eigen::VectorXd s = tri.eigenvectors().col(0);
    Eigen::VectorXcd ritz = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index i = 0; i < k; ++i)
      ritz += v[static_cast<std::size_t>(i)] * s[i];
    orthogonalize(ritz, locked);
    ritz.normalize();
    const double value = ritz.dot(m * ritz).real();
    residual = (m * ritz - value * ritz).norm();
    best = {value, ritz};
    if (residual <= tol)
      return best;
    start = ritz;
  }
  throw ComputationError("Lanczos did not converge: residual " + std::to_string(residual) +
                         " above " + std::to_string(tol));
}

// Makes the phase convention of an eigenvector deterministic: the largest
// amplitude (first on ties) is real and positive.
inline void fix_phase(Eigen::VectorXcd &v) {
  Eigen::Index arg = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > best * (1.0 + 1e-12)) {
      best = std::abs(v[i]);
      arg = i;
    }
  if (best > 0.0)
    v *= std::conj(v[arg]) / std::abs(v[arg]);
}

} // namespace detail

/// Ground energy, ground state (space) and gap of `h`; the whole spectrum
/// when `opt.full` is set.
inline SpectralData diagonalize(const QubitHamiltonian &h, const DiagonalizeOptions &opt = {}) {
  const std::size_t n = h.n_qubits();
  if (n > opt.qubit_cap)
    throw InputError("register of " + std::to_string(n) + " qubits exceeds the cap of " +
                     std::to_string(opt.qubit_cap));
  const SparseMatrix m = to_matrix(h, opt.qubit_cap);
  const Eigen::Index dim = m.rows();
  const double bound = detail::residual_bound(h);

  SpectralData out;
  out.n_qubits = n;

  std::vector<detail::EigenPair> low;
  if (n <= opt.dense_max_qubits) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver{Eigen::MatrixXcd(m)};
    if (solver.info() != Eigen::Success)
      throw ComputationError("dense Hermitian eigensolver failed");
    const Eigen::VectorXd &w = solver.eigenvalues();
    Eigen::Index count = 1;
    while (count < dim && w[count] - w[0] < opt.degeneracy_tol)
      ++count;
    for (Eigen::Index i = 0; i < std::min<Eigen::Index>(count + 1, dim); ++i)
      low.push_back({w[i], solver.eigenvectors().col(i)});
    if (opt.full) {
      out.eigenvalues = w;
      out.eigenvectors = solver.eigenvectors();
    }
  } else {
    if (opt.full)
      throw InputError("full spectrum requested for " + std::to_string(n) +
                       " qubits; dense mode is limited to " + std::to_string(opt.dense_max_qubits));
    std::vector<Eigen::VectorXcd> locked;
    const double tol = 0.1 * bound;
    for (std::size_t k = 0; k <= opt.max_ground_multiplicity; ++k) {
      if (locked.size() == static_cast<std::size_t>(dim))
        break;
      auto pair = detail::lanczos_lowest(m, locked, opt, tol, 0x9e3779b97f4a7c15ULL + k);
      const bool in_ground = !low.empty() && pair.value - low.front().value < opt.degeneracy_tol;
      low.push_back(pair);
      locked.push_back(low.back().vector);
      if (low.size() > 1 && !in_ground)
        break;
    }
  }

  // low = ground cluster followed by (at most) one excited pair.
  std::size_t ground_count = 1;
  while (ground_count < low.size() && low[ground_count].value - low[0].value < opt.degeneracy_tol)
    ++ground_count;

  Eigen::VectorXcd v0 = low[0].vector;
  detail::fix_phase(v0);
  out.ground_energy = low[0].value;
  out.residual = (m * v0 - out.ground_energy * v0).norm();
  if (out.residual > bound)
    throw ComputationError("eigen-residual " + std::to_string(out.residual) +
                           " exceeds tolerance " + std::to_string(bound));
  out.ground_state = StateVector::normalized(n, v0);
  out.degenerate = ground_count > 1;
  out.ground_space.resize(dim, static_cast<Eigen::Index>(ground_count));
  for (std::size_t i = 0; i < ground_count; ++i)
    out.ground_space.col(static_cast<Eigen::Index>(i)) = low[i].vector;
  out.ground_space.col(0) = out.ground_state.amplitudes();
  out.gap = low.size() > 1 ? low[1].value - low[0].value : 0.0;
  out.excitation_gap = ground_count < low.size() ? low[ground_count].value - low[0].value : 0.0;
  if (out.gap < 0.0)
    out.gap = 0.0;
  return out;
}

/// Report record {E0, gap, residual, n_qubits}.
inline nlohmann::ordered_json to_record(const SpectralData &s) {
  nlohmann::ordered_json j;
  j["E0"] = s.ground_energy;
  j["gap"] = s.gap;
  j["residual"] = s.residual;
  j["n_qubits"] = s.n_qubits;
  return j;
}

} // namespace gspcost
