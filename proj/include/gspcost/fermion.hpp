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

#include <algorithm>
#include <array>
#include <set>
#include <span>
#include <vector>

#include "gspcost/error.hpp"
#include "gspcost/pauli.hpp"

namespace gspcost {

/// One fermionic ladder operator: a_p (annihilate) or a_p^dagger (create).
struct Ladder {
  std::size_t orbital;
  bool dagger;
};

/// Jordan-Wigner image of a product of ladder operators, leftmost factor first.
///
///   a_j^dagger = Z_0 ... Z_{j-1} (X_j - i Y_j) / 2,   with |1> = occupied.
inline PauliSum jw_product(std::size_t n_qubits, std::span<const Ladder> ops) {
  PauliSum product = PauliSum::from_term(1.0, PauliString::identity(n_qubits));
  for (const auto &op : ops) {
    detail::require(op.orbital < n_qubits, "spin-orbital index " + std::to_string(op.orbital) +
                                               " out of range for " + std::to_string(n_qubits) +
                                               " qubits");
    std::string x(n_qubits, 'I'), y(n_qubits, 'I');
    for (std::size_t k = 0; k < op.orbital; ++k)
      x[k] = y[k] = 'Z';
    x[op.orbital] = 'X';
    y[op.orbital] = 'Y';
    PauliSum ladder(n_qubits);
    ladder.add(0.5, PauliString(x));
    ladder.add(Complex{0.0, op.dagger ? -0.5 : 0.5}, PauliString(y));
    product = product * ladder;
  }
  product.prune(1e-15);
  return product;
}

/// Anti-Hermitian excitation generator G = T - T^dagger with
///   single (p <- q):        T = a_p^dagger a_q
///   double (p, q <- r, s):  T = a_p^dagger a_q^dagger a_r a_s
/// so exp(theta G) is unitary for real theta.
struct ExcitationGenerator {
  enum class Kind { single, double_ };

  Kind kind = Kind::single;
  std::vector<std::size_t> orbitals;
  /// Drop the Jordan-Wigner parity Z strings (qubit-excitation form).
  bool drop_z = false;

  static ExcitationGenerator single(std::size_t p, std::size_t q, bool drop_z = false) {
    return {Kind::single, {p, q}, drop_z};
  }
  static ExcitationGenerator double_(std::size_t p, std::size_t q, std::size_t r, std::size_t s,
                                     bool drop_z = false) {
    return {Kind::double_, {p, q, r, s}, drop_z};
  }

  void validate(std::size_t n_qubits) const {
    const std::size_t expected = kind == Kind::single ? 2 : 4;
    detail::require(orbitals.size() == expected, "excitation generator has the wrong index count");
    for (auto o : orbitals)
      detail::require(o < n_qubits, "excitation index " + std::to_string(o) + " out of range for " +
                                        std::to_string(n_qubits) + " qubits");
    std::set<std::size_t> distinct(orbitals.begin(), orbitals.end());
    detail::require(distinct.size() == orbitals.size(), "excitation indices must be distinct");
  }

  bool operator==(const ExcitationGenerator &) const = default;
};

/// Pauli decomposition of the generator, canonical order, purely imaginary
/// coefficients.
inline std::vector<PauliTerm> jordan_wigner(const ExcitationGenerator &gen, std::size_t n_qubits) {
  gen.validate(n_qubits);
  std::vector<Ladder> ops;
  if (gen.kind == ExcitationGenerator::Kind::single) {
    ops = {{gen.orbitals[0], true}, {gen.orbitals[1], false}};
  } else {
    ops = {{gen.orbitals[0], true}, {gen.orbitals[1], true}, {gen.orbitals[2], false},
           {gen.orbitals[3], false}};
  }
  PauliSum t = jw_product(n_qubits, ops);
  PauliSum g = t;
  g -= t.adjoint();
  g.prune(1e-15);
  if (!gen.drop_z)
    return g.terms();

  PauliSum stripped(n_qubits);
  for (const auto &term : g.terms()) {
    std::string letters = term.string.letters();
    for (std::size_t q = 0; q < letters.size(); ++q)
      if (letters[q] == 'Z' &&
          std::find(gen.orbitals.begin(), gen.orbitals.end(), q) == gen.orbitals.end())
        letters[q] = 'I';
    stripped.add(term.coeff, PauliString(std::move(letters)));
  }
  stripped.prune(1e-15);
  return stripped.terms();
}

/// Number of single-qubit Pauli rotations a first-order compilation needs:
/// one per non-identity string.
inline std::size_t rotation_count(std::span<const PauliTerm> terms) {
  return static_cast<std::size_t>(std::count_if(
      terms.begin(), terms.end(), [](const PauliTerm &t) { return !t.string.is_identity(); }));
}

inline bool mutually_commuting(std::span<const PauliTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (!terms[i].string.commutes_with(terms[j].string))
        return false;
  return true;
}

/// psi <- exp(theta * G) psi for an anti-Hermitian G = sum_k c_k P_k.
///
/// Commuting decompositions (every single and double excitation) are applied
/// exactly as a product of Pauli rotations; anything else falls back to a
/// scaled Taylor series of the sparse generator.
inline void apply_generator_exponential(std::span<const PauliTerm> terms, double theta,
                                        Eigen::VectorXcd &psi) {
  if (theta == 0.0 || terms.empty())
    return;
  for (const auto &t : terms)
    detail::require(std::abs(t.coeff.real()) <= 1e-14 * std::max(1.0, std::abs(t.coeff)),
                    "generator term " + t.string.letters() + " is not anti-Hermitian");
  if (mutually_commuting(terms)) {
    // theta * (i b) P = i (theta b) P.
    for (const auto &t : terms)
      apply_pauli_rotation(t.string, theta * t.coeff.imag(), psi);
    return;
  }

  const auto n_qubits = terms.front().string.n_qubits();
  const SparseMatrix g = pauli_sum_matrix(n_qubits, terms);
  double norm = 0.0;
  for (const auto &t : terms)
    norm += std::abs(t.coeff);
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(theta) * norm / 0.5)));
  const double h = theta / steps;
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXcd term = psi, sum = psi;
    for (int k = 1; k < 40; ++k) {
      term = (g * term) * (h / k);
      sum += term;
      if (term.norm() < 1e-18 * sum.norm())
        break;
    }
    psi = sum;
  }
}

} // namespace gspcost
