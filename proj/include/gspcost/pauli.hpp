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
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "gspcost/error.hpp"

namespace gspcost {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Largest register realized as a matrix unless a caller overrides it.
inline constexpr std::size_t kDefaultQubitCap = 16;

/// Tensor product of single-qubit Paulis, letter q acting on qubit q.
///
/// Basis states are indexed big-endian: qubit 0 is the most significant bit
/// of the computational-basis index, so |1100> is index 12.
class PauliString {
public:
  PauliString() = default;

  explicit PauliString(std::string letters) : letters_(std::move(letters)) {
    detail::require(!letters_.empty(), "Pauli string must act on at least one qubit");
    detail::require(letters_.size() <= 63, "Pauli string longer than 63 qubits");
    for (char c : letters_)
      detail::require(c == 'I' || c == 'X' || c == 'Y' || c == 'Z',
                      "invalid Pauli letter '" + std::string(1, c) + "' in \"" +
                          letters_ + "\"");
  }

  static PauliString identity(std::size_t n_qubits) {
    return PauliString(std::string(n_qubits, 'I'));
  }

  /// Single letter `letter` on `qubit`, identity elsewhere.
  static PauliString single(std::size_t n_qubits, std::size_t qubit, char letter) {
    detail::require(qubit < n_qubits, "qubit index out of range");
    std::string s(n_qubits, 'I');
    s[qubit] = letter;
    return PauliString(std::move(s));
  }

  std::size_t n_qubits() const { return letters_.size(); }
  const std::string &letters() const { return letters_; }
  char operator[](std::size_t q) const { return letters_[q]; }

  bool is_identity() const {
    return std::all_of(letters_.begin(), letters_.end(), [](char c) { return c == 'I'; });
  }

  std::uint64_t x_mask() const { return mask_of([](char c) { return c == 'X' || c == 'Y'; }); }
  std::uint64_t z_mask() const { return mask_of([](char c) { return c == 'Z' || c == 'Y'; }); }
  int y_count() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'Y')); }

  bool commutes_with(const PauliString &other) const {
    detail::require(other.n_qubits() == n_qubits(), "Pauli strings differ in length");
    int anti = 0;
    for (std::size_t q = 0; q < letters_.size(); ++q) {
      char a = letters_[q], b = other.letters_[q];
      if (a != 'I' && b != 'I' && a != b)
        ++anti;
    }
    return anti % 2 == 0;
  }

  auto operator<=>(const PauliString &) const = default;

private:
  template <class Pred> std::uint64_t mask_of(Pred pred) const {
    std::uint64_t m = 0;
    const std::size_t n = letters_.size();
    for (std::size_t q = 0; q < n; ++q)
      if (pred(letters_[q]))
        m |= std::uint64_t{1} << (n - 1 - q);
    return m;
  }

  std::string letters_;
};

namespace detail {

// Product of two single-qubit letters: a*b = phase * result.
inline std::pair<Complex, char> multiply_letters(char a, char b) {
  const Complex i{0.0, 1.0};
  if (a == 'I')
    return {1.0, b};
  if (b == 'I')
    return {1.0, a};
  if (a == b)
    return {1.0, 'I'};
  if (a == 'X')
    return b == 'Y' ? std::pair{i, 'Z'} : std::pair{-i, 'Y'};
  if (a == 'Y')
    return b == 'Z' ? std::pair{i, 'X'} : std::pair{-i, 'Z'};
  return b == 'X' ? std::pair{i, 'Y'} : std::pair{-i, 'X'};
}

// <basis r| P |basis c> for c the column; P|c> = phase(c) |c ^ x_mask>.
inline Complex pauli_phase(const PauliString &p, std::uint64_t column) {
  static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex phase = powers[p.y_count() % 4];
  if (std::popcount(column & p.z_mask()) % 2)
    phase = -phase;
  return phase;
}

} // namespace detail

/// a * b as (phase, string).
inline std::pair<Complex, PauliString> multiply(const PauliString &a, const PauliString &b) {
  detail::require(a.n_qubits() == b.n_qubits(), "Pauli strings differ in length");
  Complex phase = 1.0;
  std::string out(a.n_qubits(), 'I');
  for (std::size_t q = 0; q < a.n_qubits(); ++q) {
    auto [ph, letter] = detail::multiply_letters(a[q], b[q]);
    phase *= ph;
    out[q] = letter;
  }
  return {phase, PauliString(std::move(out))};
}

struct PauliTerm {
  Complex coeff;
  PauliString string;
};

/// Mutable accumulator of Pauli terms keyed by string; the algebra used to
/// build qubit operators before they are frozen into a QubitHamiltonian.
class PauliSum {
public:
  explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  static PauliSum from_term(Complex coeff, PauliString string) {
    PauliSum s(string.n_qubits());
    s.add(coeff, std::move(string));
    return s;
  }

  std::size_t n_qubits() const { return n_qubits_; }

  void add(Complex coeff, const PauliString &string) {
    detail::require(string.n_qubits() == n_qubits_, "term acts on the wrong number of qubits");
    terms_[string] += coeff;
  }

  PauliSum &operator+=(const PauliSum &other) {
    for (const auto &[s, c] : other.terms_)
      add(c, s);
    return *this;
  }

  PauliSum &operator-=(const PauliSum &other) {
    for (const auto &[s, c] : other.terms_)
      add(-c, s);
    return *this;
  }

  friend PauliSum operator*(const PauliSum &lhs, const PauliSum &rhs) {
    detail::require(lhs.n_qubits_ == rhs.n_qubits_, "operands act on different registers");
    PauliSum out(lhs.n_qubits_);
    for (const auto &[sa, ca] : lhs.terms_)
      for (const auto &[sb, cb] : rhs.terms_) {
        auto [phase, s] = multiply(sa, sb);
        out.add(phase * ca * cb, s);
      }
    return out;
  }

  PauliSum adjoint() const {
    PauliSum out(n_qubits_);
    for (const auto &[s, c] : terms_)
      out.terms_[s] = std::conj(c);
    return out;
  }

  /// Drops terms with |coeff| <= tol.
  void prune(double tol) {
    std::erase_if(terms_, [tol](const auto &kv) { return std::abs(kv.second) <= tol; });
  }

  /// Canonical (lexicographic) order.
  std::vector<PauliTerm> terms() const {
    std::vector<PauliTerm> out;
    out.reserve(terms_.size());
    for (const auto &[s, c] : terms_)
      out.push_back({c, s});
    return out;
  }

private:
  std::size_t n_qubits_;
  std::map<PauliString, Complex> terms_;
};

/// Hermitian weighted sum of Pauli strings with distinct, canonically ordered
/// strings and real coefficients.
class QubitHamiltonian {
public:
  /// Merges duplicate strings, drops exact cancellations and rejects
  /// non-finite or non-Hermitian input.
  QubitHamiltonian(std::size_t n_qubits, std::span<const PauliTerm> terms) : n_qubits_(n_qubits) {
    detail::require(n_qubits >= 1, "n_qubits must be positive");
    PauliSum sum(n_qubits);
    for (const auto &t : terms) {
      detail::require(std::isfinite(t.coeff.real()) && std::isfinite(t.coeff.imag()),
                      "non-finite coefficient for " + t.string.letters());
      detail::require(t.string.n_qubits() == n_qubits,
                      "term \"" + t.string.letters() + "\" does not act on " +
                          std::to_string(n_qubits) + " qubits");
      sum.add(t.coeff, t.string);
    }
    for (auto &t : sum.terms()) {
      if (t.coeff == Complex{0.0, 0.0})
        continue;
      if (std::abs(t.coeff.imag()) > 1e-12 * std::abs(t.coeff))
        throw InputError("non-Hermitian Hamiltonian: term " + t.string.letters() +
                         " has a complex coefficient");
      terms_.push_back({Complex{t.coeff.real(), 0.0}, std::move(t.string)});
    }
  }

  QubitHamiltonian(std::size_t n_qubits, std::initializer_list<PauliTerm> terms)
      : QubitHamiltonian(n_qubits, std::span<const PauliTerm>(terms.begin(), terms.size())) {}

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm> &terms() const { return terms_; }

  /// Sum of |coeff|, an upper bound on the operator norm.
  double coefficient_norm() const {
    double s = 0.0;
    for (const auto &t : terms_)
      s += std::abs(t.coeff);
    return s;
  }

  /// Number of non-identity strings.
  std::size_t non_identity_terms() const {
    return static_cast<std::size_t>(std::count_if(
        terms_.begin(), terms_.end(), [](const PauliTerm &t) { return !t.string.is_identity(); }));
  }

private:
  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Sparse realization of sum_k coeff_k P_k on the full 2^n space.
inline SparseMatrix pauli_sum_matrix(std::size_t n_qubits, std::span<const PauliTerm> terms,
                                     std::size_t qubit_cap = kDefaultQubitCap) {
  if (n_qubits > qubit_cap)
    throw InputError("register of " + std::to_string(n_qubits) + " qubits exceeds the cap of " +
                     std::to_string(qubit_cap));
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;

  // Group by flip pattern so each row gets one entry per distinct x-mask.
  std::map<std::uint64_t, std::vector<const PauliTerm *>> by_flip;
  for (const auto &t : terms) {
    detail::require(t.string.n_qubits() == n_qubits, "term acts on the wrong number of qubits");
    by_flip[t.string.x_mask()].push_back(&t);
  }

  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim) * by_flip.size());
  for (std::uint64_t row = 0; row < dim; ++row) {
    for (const auto &[flip, group] : by_flip) {
      const std::uint64_t col = row ^ flip;
      Complex v = 0.0;
      for (const PauliTerm *t : group)
        v += t->coeff * detail::pauli_phase(t->string, col);
      if (v != Complex{0.0, 0.0})
        triplets.emplace_back(static_cast<int>(row), static_cast<int>(col), v);
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

inline SparseMatrix to_matrix(const QubitHamiltonian &h, std::size_t qubit_cap = kDefaultQubitCap) {
  return pauli_sum_matrix(h.n_qubits(), h.terms(), qubit_cap);
}

/// out = P * in without forming a matrix.
inline void apply_pauli(const PauliString &p, const Eigen::VectorXcd &in, Eigen::VectorXcd &out) {
  const std::uint64_t flip = p.x_mask();
  const auto dim = static_cast<std::uint64_t>(in.size());
  out.resize(in.size());
  for (std::uint64_t col = 0; col < dim; ++col)
    out[static_cast<Eigen::Index>(col ^ flip)] = detail::pauli_phase(p, col) * in[static_cast<Eigen::Index>(col)];
}

/// In-place psi <- exp(i * angle * P) psi = cos(angle) psi + i sin(angle) P psi.
inline void apply_pauli_rotation(const PauliString &p, double angle, Eigen::VectorXcd &psi) {
  const std::uint64_t flip = p.x_mask();
  const auto dim = static_cast<std::uint64_t>(psi.size());
  const double c = std::cos(angle), s = std::sin(angle);
  const Complex is{0.0, s};
  if (flip == 0) {
    const Complex plus{c, s}, minus{c, -s};
    for (std::uint64_t b = 0; b < dim; ++b)
      psi[static_cast<Eigen::Index>(b)] *= (std::popcount(b & p.z_mask()) % 2) ? minus : plus;
    return;
  }
  for (std::uint64_t b = 0; b < dim; ++b) {
    const std::uint64_t partner = b ^ flip;
    if (partner < b)
      continue;
    const auto ib = static_cast<Eigen::Index>(b), ip = static_cast<Eigen::Index>(partner);
    const Complex vb = psi[ib], vp = psi[ip];
    // (P v)_b = phase(partner) v_partner and vice versa.
    psi[ib] = c * vb + is * detail::pauli_phase(p, partner) * vp;
    psi[ip] = c * vp + is * detail::pauli_phase(p, b) * vb;
  }
}

} // namespace gspcost
