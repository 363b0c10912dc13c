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

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "gspcost/error.hpp"
#include "gspcost/fermion.hpp"
#include "gspcost/pauli.hpp"
#include "gspcost/spectral.hpp"

namespace gspcost {

enum class Variant { spa, spa_s, spa_gs, spa_gas };

inline std::string to_string(Variant v) {
  switch (v) {
  case Variant::spa: return "SPA";
  case Variant::spa_s: return "SPA+S";
  case Variant::spa_gs: return "SPA+GS";
  case Variant::spa_gas: return "SPA+GAS";
  }
  return "?";
}

inline Variant parse_variant(const std::string &name) {
  for (auto v : {Variant::spa, Variant::spa_s, Variant::spa_gs, Variant::spa_gas})
    if (to_string(v) == name)
      return v;
  throw InputError("unknown ansatz variant: " + name);
}

/// Occupied spatial orbital `occupied` paired with virtual spatial orbital
/// `virtual_orbital`; spatial orbital p owns spin orbitals 2p (alpha) and 2p+1.
struct ElectronPair {
  std::size_t occupied;
  std::size_t virtual_orbital;

  std::array<std::size_t, 4> spin_orbitals() const {
    return {2 * occupied, 2 * occupied + 1, 2 * virtual_orbital, 2 * virtual_orbital + 1};
  }
  bool operator==(const ElectronPair &) const = default;
};

struct AnsatzGate {
  enum class Role { pair, single };
  ExcitationGenerator generator;
  Role role = Role::single;
  bool operator==(const AnsatzGate &) const = default;
};

struct AnsatzSpec {
  std::size_t n_qubits = 0;
  std::size_t n_electrons = 0;
  Variant variant = Variant::spa;
  std::vector<ElectronPair> pairs;
  std::vector<AnsatzGate> gates;
  std::vector<double> theta;

  void validate() const {
    detail::require(n_qubits >= 1, "ansatz needs at least one qubit");
    detail::require(n_electrons <= n_qubits, "more electrons than spin orbitals");
    detail::require(gates.size() == theta.size(), "ansatz has " + std::to_string(gates.size()) +
                                                      " gates but " + std::to_string(theta.size()) +
                                                      " parameters");
    std::set<std::size_t> used;
    for (const auto &p : pairs)
      for (auto so : p.spin_orbitals()) {
        detail::require(so < n_qubits, "pair orbital out of range");
        detail::require(used.insert(so).second, "electron pairs must act on disjoint orbitals");
      }
    for (const auto &g : gates)
      g.generator.validate(n_qubits);
  }

  bool operator==(const AnsatzSpec &) const = default;
};

namespace detail {

inline void check_pairs(std::size_t n_occ, std::size_t n_spatial, const std::vector<ElectronPair> &pairs) {
  require(pairs.size() == n_occ, "pair partition must hold one pair per occupied spatial orbital");
  std::set<std::size_t> occ, virt;
  for (const auto &p : pairs) {
    require(p.occupied < n_occ, "pair occupied orbital " + std::to_string(p.occupied) + " is not occupied");
    require(p.virtual_orbital >= n_occ && p.virtual_orbital < n_spatial,
            "pair virtual orbital " + std::to_string(p.virtual_orbital) + " is not virtual");
    require(occ.insert(p.occupied).second && virt.insert(p.virtual_orbital).second,
            "electron pairs must act on disjoint orbitals");
  }
}

} // namespace detail

/// Separable-pair circuit for a closed-shell reference.
///
/// The SPA layer holds one paired double excitation per electron pair. SPA+S
/// appends same-spin occupied->virtual singles, SPA+GS same-spin singles
/// between every orbital pair, SPA+GAS the GS singles without parity strings.
/// By default occupied spatial orbital i is paired with virtual n_occ + i.
inline AnsatzSpec build_ansatz(std::size_t n_qubits, std::size_t n_electrons, Variant variant,
                               std::optional<std::vector<ElectronPair>> partition = std::nullopt) {
  detail::require(n_electrons % 2 == 0, "separable-pair ansatz needs an even (closed-shell) electron count");
  detail::require(n_qubits % 2 == 0, "separable-pair ansatz needs an even number of spin orbitals");
  detail::require(n_electrons <= n_qubits, "more electrons than spin orbitals");
  const std::size_t n_spatial = n_qubits / 2;
  const std::size_t n_occ = n_electrons / 2;

  AnsatzSpec spec;
  spec.n_qubits = n_qubits;
  spec.n_electrons = n_electrons;
  spec.variant = variant;
  if (partition) {
    detail::check_pairs(n_occ, n_spatial, *partition);
    spec.pairs = *partition;
  } else {
    detail::require(n_spatial - n_occ >= n_occ,
                    "insufficient virtual orbitals: " + std::to_string(n_occ) + " pairs need " +
                        std::to_string(n_occ) + " virtual spatial orbitals, have " +
                        std::to_string(n_spatial - n_occ));
    for (std::size_t i = 0; i < n_occ; ++i)
      spec.pairs.push_back({i, n_occ + i});
  }

  for (const auto &p : spec.pairs) {
    const auto so = p.spin_orbitals();
    spec.gates.push_back({ExcitationGenerator::double_(so[2], so[3], so[1], so[0]), AnsatzGate::Role::pair});
  }

  if (variant == Variant::spa_s) {
    for (std::size_t i = 0; i < n_electrons; ++i)
      for (std::size_t a = n_electrons; a < n_qubits; ++a)
        if (i % 2 == a % 2)
          spec.gates.push_back({ExcitationGenerator::single(a, i), AnsatzGate::Role::single});
  } else if (variant == Variant::spa_gs || variant == Variant::spa_gas) {
    const bool drop_z = variant == Variant::spa_gas;
    for (std::size_t q = 0; q < n_qubits; ++q)
      for (std::size_t p = q + 1; p < n_qubits; ++p)
        if (p % 2 == q % 2)
          spec.gates.push_back({ExcitationGenerator::single(p, q, drop_z), AnsatzGate::Role::single});
  }
  spec.theta.assign(spec.gates.size(), 0.0);
  return spec;
}

/// Pre-decomposed circuit; Pauli decompositions are computed once.
class AnsatzCircuit {
public:
  explicit AnsatzCircuit(const AnsatzSpec &spec) : spec_(spec) {
    spec.validate();
    generators_.reserve(spec.gates.size());
    for (const auto &g : spec.gates)
      generators_.push_back(jordan_wigner(g.generator, spec.n_qubits));
  }

  const AnsatzSpec &spec() const { return spec_; }
  std::size_t size() const { return generators_.size(); }

  /// prod_k exp(theta_k G_k) |reference>, gate 0 applied first.
  StateVector apply(std::span<const double> theta, const StateVector &reference) const {
    detail::require(theta.size() == generators_.size(),
                    "parameter count " + std::to_string(theta.size()) + " does not match " +
                        std::to_string(generators_.size()) + " gates");
    detail::require(reference.n_qubits() == spec_.n_qubits, "reference state has the wrong register size");
    Eigen::VectorXcd psi = reference.amplitudes();
    for (std::size_t k = 0; k < generators_.size(); ++k)
      apply_generator_exponential(generators_[k], theta[k], psi);
    return StateVector::normalized(spec_.n_qubits, std::move(psi));
  }

private:
  AnsatzSpec spec_;
  std::vector<std::vector<PauliTerm>> generators_;
};

inline StateVector apply_circuit(const AnsatzSpec &spec, std::span<const double> theta,
                                 const StateVector &reference) {
  return AnsatzCircuit(spec).apply(theta, reference);
}

inline StateVector apply_circuit(const AnsatzSpec &spec, std::span<const double> theta) {
  return apply_circuit(spec, theta, hf_state(spec.n_qubits, spec.n_electrons));
}

/// Rotation strings after compilation, one list per gate.
///
/// A paired double excitation acting on a closed-shell pair reference reduces
/// to one Y rotation on the pair's occupied alpha qubit followed by CNOTs, so
/// it contributes a single rotation; singles keep their Jordan-Wigner strings.
inline std::vector<std::vector<PauliTerm>> compile_rotations(const AnsatzSpec &spec) {
  spec.validate();
  std::vector<std::vector<PauliTerm>> out;
  out.reserve(spec.gates.size());
  for (const auto &g : spec.gates) {
    if (g.role == AnsatzGate::Role::pair) {
      const std::size_t anchor = std::min(g.generator.orbitals[2], g.generator.orbitals[3]);
      out.push_back({{Complex{0.0, 1.0}, PauliString::single(spec.n_qubits, anchor, 'Y')}});
    } else {
      out.push_back(jordan_wigner(g.generator, spec.n_qubits));
    }
  }
  return out;
}

inline std::size_t rotation_count(const AnsatzSpec &spec) {
  std::size_t r = 0;
  for (const auto &gate : compile_rotations(spec))
    r += rotation_count(gate);
  return r;
}

struct VqeResult {
  double energy = 0.0;
  double fidelity_sq = 0.0;
  std::vector<double> theta;
  std::size_t evaluations = 0;
  bool converged = false;
  std::size_t restart = 0;
};

struct OptimizeOptions {
  std::uint64_t seed = 0;
  std::size_t restarts = 5;
  std::size_t max_sweeps = 200;
  double energy_tol = 1e-12;
  /// Half-width of the "random close to zero" initial angle distribution.
  double init_width = 0.01;
  /// Replaces the random start of every restart.
  std::optional<std::vector<double>> initial_theta;
  /// Replaces the Hartree-Fock reference.
  std::optional<StateVector> reference;
};

namespace detail {

inline double expectation(const SparseMatrix &h, const StateVector &psi) {
  return psi.amplitudes().dot(h * psi.amplitudes()).real();
}

// Minimizes a 2pi-periodic function of one angle: coarse grid bracket, then
// golden-section refinement inside the bracket.
template <class F> std::pair<double, double> periodic_line_search(F &&f, double current, double f_current) {
  constexpr int grid = 24;
  const double step = 2.0 * std::numbers::pi / grid;
  double best_x = current, best_f = f_current;
  for (int i = 1; i < grid; ++i) {
    const double value = f(current + i * step);
    if (value < best_f) {
      best_f = value;
      best_x = current + i * step;
    }
  }
  double lo = best_x - step, hi = best_x + step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (lo + hi), fm = f(xm);
  if (fm < best_f) {
    best_f = fm;
    best_x = xm;
  }
  best_x = std::remainder(best_x, 2.0 * std::numbers::pi);
  return {best_x, best_f};
}

} // namespace detail

/// Variational minimization of <psi(theta)|H|psi(theta)> by coordinate descent
/// with golden-section line searches. Restarts run in index order; the best
/// energy wins, ties going to the lower restart index.
inline VqeResult optimize(const AnsatzSpec &spec, const QubitHamiltonian &h, const SpectralData &spectrum,
                          const OptimizeOptions &opt = {}) {
  detail::require(spec.n_qubits == h.n_qubits(), "ansatz and Hamiltonian act on different registers");
  detail::require(opt.restarts >= 1, "at least one restart is required");
  const AnsatzCircuit circuit(spec);
  const SparseMatrix hm = to_matrix(h);
  const StateVector reference = opt.reference ? *opt.reference : hf_state(spec.n_qubits, spec.n_electrons);
  if (opt.initial_theta)
    detail::require(opt.initial_theta->size() == circuit.size(), "initial angles do not match the gate count");

  VqeResult best;
  bool have_best = false;
  std::size_t evaluations = 0;
  for (std::size_t r = 0; r < opt.restarts; ++r) {
    std::vector<double> theta(circuit.size(), 0.0);
    if (opt.initial_theta) {
      theta = *opt.initial_theta;
    } else {
      std::mt19937_64 rng(opt.seed + r);
      std::uniform_real_distribution<double> dist(-opt.init_width, opt.init_width);
      for (auto &t : theta)
        t = dist(rng);
    }
    auto energy_of = [&](const std::vector<double> &th) {
      ++evaluations;
      return detail::expectation(hm, circuit.apply(th, reference));
    };

    double energy = energy_of(theta);
    bool converged = circuit.size() == 0;
    for (std::size_t sweep = 0; sweep < opt.max_sweeps && !converged; ++sweep) {
      const double start = energy;
      for (std::size_t k = 0; k < theta.size(); ++k) {
        auto line = [&](double x) {
          const double saved = theta[k];
          theta[k] = x;
          const double e = energy_of(theta);
          theta[k] = saved;
          return e;
        };
        auto [x, e] = detail::periodic_line_search(line, theta[k], energy);
        if (e < energy) {
          theta[k] = x;
          energy = e;
        }
      }
      converged = start - energy <= opt.energy_tol;
    }
    if (!have_best || energy < best.energy) {
      best.energy = energy;
      best.theta = theta;
      best.converged = converged;
      best.restart = r;
      have_best = true;
    }
  }
  best.evaluations = evaluations;
  best.fidelity_sq = ground_overlap_sq(spectrum, circuit.apply(best.theta, reference));
  return best;
}

inline VqeResult optimize(const AnsatzSpec &spec, const QubitHamiltonian &h, const OptimizeOptions &opt = {}) {
  return optimize(spec, h, diagonalize(h), opt);
}

// ---------------------------------------------------------------------------
// Spec-file serialization.

inline nlohmann::ordered_json to_json(const AnsatzSpec &spec) {
  nlohmann::ordered_json j;
  j["n_qubits"] = spec.n_qubits;
  j["n_electrons"] = spec.n_electrons;
  j["variant"] = to_string(spec.variant);
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto &p : spec.pairs)
    j["pairs"].push_back({p.occupied, p.virtual_orbital});
  j["gates"] = nlohmann::ordered_json::array();
  for (const auto &g : spec.gates) {
    nlohmann::ordered_json gj;
    gj["kind"] = g.generator.kind == ExcitationGenerator::Kind::single ? "single" : "double";
    gj["orbitals"] = g.generator.orbitals;
    gj["drop_z"] = g.generator.drop_z;
    gj["role"] = g.role == AnsatzGate::Role::pair ? "pair" : "single";
    j["gates"].push_back(gj);
  }
  j["theta"] = spec.theta;
  return j;
}

inline AnsatzSpec ansatz_from_json(const nlohmann::json &j) {
  auto keys_only = [](const nlohmann::json &obj, std::initializer_list<const char *> allowed,
                      const std::string &where) {
    detail::require(obj.is_object(), where + " must be an object");
    for (const auto &[key, value] : obj.items()) {
      bool ok = false;
      for (const char *a : allowed)
        ok = ok || key == a;
      detail::require(ok, "unknown key in " + where + ": " + key);
    }
    for (const char *a : allowed)
      detail::require(obj.contains(a), where + " is missing \"" + std::string(a) + "\"");
  };
  try {
    keys_only(j, {"n_qubits", "n_electrons", "variant", "pairs", "gates", "theta"}, "ansatz spec");
    AnsatzSpec spec;
    spec.n_qubits = j.at("n_qubits").get<std::size_t>();
    spec.n_electrons = j.at("n_electrons").get<std::size_t>();
    spec.variant = parse_variant(j.at("variant").get<std::string>());
    for (const auto &p : j.at("pairs")) {
      detail::require(p.is_array() && p.size() == 2, "pair entries must be [occupied, virtual]");
      spec.pairs.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
    }
    for (const auto &g : j.at("gates")) {
      keys_only(g, {"kind", "orbitals", "drop_z", "role"}, "gate");
      AnsatzGate gate;
      const auto kind = g.at("kind").get<std::string>();
      detail::require(kind == "single" || kind == "double", "gate kind must be single or double");
      gate.generator.kind = kind == "single" ? ExcitationGenerator::Kind::single : ExcitationGenerator::Kind::double_;
      gate.generator.orbitals = g.at("orbitals").get<std::vector<std::size_t>>();
      gate.generator.drop_z = g.at("drop_z").get<bool>();
      const auto role = g.at("role").get<std::string>();
      detail::require(role == "pair" || role == "single", "gate role must be pair or single");
      gate.role = role == "pair" ? AnsatzGate::Role::pair : AnsatzGate::Role::single;
      spec.gates.push_back(std::move(gate));
    }
    spec.theta = j.at("theta").get<std::vector<double>>();
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception &e) {
    throw InputError(std::string("malformed ansatz spec: ") + e.what());
  }
}

inline AnsatzSpec parse_ansatz(const std::string &text) {
  try {
    return ansatz_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError(std::string("malformed ansatz spec: ") + e.what());
  }
}

} // namespace gspcost
