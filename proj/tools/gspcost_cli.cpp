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
// gspcost command-line front end.
//
// Exit codes: 0 success, 1 computation failure, 2 input error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "gspcost.hpp"

namespace {

using gspcost::InputError;
using json = nlohmann::ordered_json;

void emit(const json &record, const std::string &out_path) {
  const std::string text = record.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw InputError("cannot write " + out_path);
    out << text;
  }
  std::cout << text;
}

struct HamiltonianArgs {
  std::string path;
  std::optional<std::size_t> electrons;
  std::string out;
};

json cmd_spectrum(const HamiltonianArgs &args) {
  const auto h = gspcost::load_hamiltonian(args.path);
  const auto spec = gspcost::diagonalize(h);
  json r = gspcost::to_record(spec);
  r["degenerate"] = spec.degenerate;
  if (args.electrons)
    r["gamma0_sq"] = gspcost::ground_overlap_sq(spec, gspcost::hf_state(h.n_qubits(), *args.electrons));
  return r;
}

struct SpaArgs {
  HamiltonianArgs ham;
  std::string variant = "SPA";
  std::uint64_t seed = 7;
  std::size_t restarts = 5;
  double delta_c = 1e-3;
  std::string spec_out;
};

json cmd_spa(const SpaArgs &args) {
  const auto h = gspcost::load_hamiltonian(args.ham.path);
  auto ansatz = gspcost::build_ansatz(h.n_qubits(), *args.ham.electrons, gspcost::parse_variant(args.variant));
  gspcost::OptimizeOptions opt;
  opt.seed = args.seed;
  opt.restarts = args.restarts;
  const auto res = gspcost::optimize(ansatz, h, opt);
  ansatz.theta = res.theta;
  if (!args.spec_out.empty()) {
    std::ofstream out(args.spec_out, std::ios::binary);
    if (!out)
      throw InputError("cannot write " + args.spec_out);
    out << gspcost::to_json(ansatz).dump(2) << "\n";
  }
  const std::size_t r = gspcost::rotation_count(ansatz);
  const auto est = gspcost::estimate(r, args.delta_c);
  json j;
  j["variant"] = args.variant;
  j["energy"] = res.energy;
  j["fidelity_sq"] = res.fidelity_sq;
  j["theta"] = res.theta;
  j["evaluations"] = res.evaluations;
  j["converged"] = res.converged;
  j["rotations"] = r;
  j["t_count"] = est.t_count;
  return j;
}

struct BoostArgs {
  HamiltonianArgs ham;
  std::optional<double> a, shift;
  double depth = 10.0;
  std::size_t n_points = 200;
  std::string backend = "exact";
  std::size_t k = 1;
};

json cmd_boost(const BoostArgs &args) {
  const auto h = gspcost::load_hamiltonian(args.ham.path);
  const auto spec = gspcost::diagonalize(h);
  const auto psi = gspcost::hf_state(h.n_qubits(), *args.ham.electrons);
  gspcost::BoosterConfig cfg;
  cfg.a = args.a ? *args.a : gspcost::default_width(spec.excitation_gap);
  cfg.depth = args.depth;
  cfg.n_points = args.n_points;
  cfg.shift = args.shift;
  cfg.backend = gspcost::parse_backend(args.backend);
  cfg.trotter_steps = args.k;
  const auto res = gspcost::gaussian_fourier(h, psi, cfg);
  json j;
  j["n_qubits"] = h.n_qubits();
  j["a"] = cfg.a;
  j["D"] = cfg.depth;
  j["N"] = cfg.n_points;
  j["K"] = cfg.trotter_steps;
  j["backend"] = args.backend;
  j["p_succ"] = res.p_succ;
  j["overlap_sq"] = res.overlap_sq;
  j["gamma0_sq"] = gspcost::ground_overlap_sq(spec, psi);
  j["depth_proxy"] = res.depth_proxy;
  return j;
}

struct ResourceArgs {
  std::optional<std::size_t> rotations;
  double delta_c = 1e-3;
  std::string log_base = "natural";
  std::optional<double> t_k1, gap, toffoli;
  std::size_t k = 10;
  double depth = 10.0;
};

json cmd_resources(const ResourceArgs &args) {
  json j;
  if (args.rotations) {
    const auto est = gspcost::estimate(*args.rotations, args.delta_c, gspcost::parse_log_base(args.log_base));
    j["R"] = est.rotations;
    j["delta_C"] = est.delta_c;
    j["delta"] = est.delta;
    j["log_base"] = args.log_base;
    j["t_count"] = est.t_count;
    j["t_count_rounded"] = est.t_count_rounded();
  }
  if (args.t_k1) {
    j["K"] = args.k;
    j["D"] = args.depth;
    j["t_b"] = gspcost::booster_t_count(args.depth, static_cast<double>(args.k), *args.t_k1);
  }
  if (args.gap)
    j["max_sim_time"] = gspcost::max_sim_time(args.depth, *args.gap);
  if (args.toffoli)
    j["t_from_toffoli"] = gspcost::toffoli_to_t(*args.toffoli);
  if (j.empty())
    throw InputError("resources: give --rotations, --t-k1, --gap or --toffoli");
  return j;
}

struct SpeedupArgs {
  double gamma_sq = 1.0, gamma0_sq = 1.0;
  double sum = 1.0;
  std::optional<double> alpha, beta;
  bool booster = false;
  double t_gsee = 1.0, t_b = 0.0, p_succ = 1.0, eps_tilde = 1.6e-3;
};

json cmd_speedup(const SpeedupArgs &args) {
  json j;
  const double gamma = std::sqrt(args.gamma_sq), gamma0 = std::sqrt(args.gamma0_sq);
  if (!args.booster) {
    const double r = gspcost::spa_speedup(gamma, gamma0, args.sum);
    j["method"] = "SPA+X";
    j["exponent_sum"] = args.sum;
    j["ratio"] = r;
    j["accepted"] = r > 1.0;
    return j;
  }
  gspcost::SpeedupInputs in;
  in.gamma = gamma;
  in.gamma0 = gamma0;
  in.alpha = args.alpha.value_or(0.0);
  in.beta = args.beta.value_or(args.sum - in.alpha);
  in.t_gsp = args.t_b;
  in.t_gsee = args.t_gsee;
  in.p_succ = args.p_succ;
  in.eps_tilde = args.eps_tilde;
  const double r = gspcost::booster_speedup(in);
  j["method"] = "booster";
  j["alpha"] = in.alpha;
  j["beta"] = in.beta;
  j["eps_tilde"] = in.eps_tilde;
  j["ratio"] = r;
  j["accepted"] = r > 1.0;
  return j;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Cost/benefit of heuristic ground-state preparation versus Hartree-Fock"};
  app.require_subcommand(1);

  HamiltonianArgs spectrum_args;
  auto *spectrum = app.add_subcommand("spectrum", "Ground energy, gap and HF overlap of a Hamiltonian file");
  spectrum->add_option("hamiltonian", spectrum_args.path, "Hamiltonian JSON file")->required();
  spectrum->add_option("--electrons", spectrum_args.electrons, "Electron count for the HF reference");
  spectrum->add_option("--out", spectrum_args.out, "Also write the record to this file");

  SpaArgs spa_args;
  auto *spa = app.add_subcommand("spa", "Optimize a separable-pair ansatz");
  spa->add_option("hamiltonian", spa_args.ham.path, "Hamiltonian JSON file")->required();
  spa->add_option("--electrons", spa_args.ham.electrons, "Electron count")->required();
  spa->add_option("--variant", spa_args.variant, "SPA, SPA+S, SPA+GS or SPA+GAS");
  spa->add_option("--seed", spa_args.seed, "Seed for initial angles");
  spa->add_option("--restarts", spa_args.restarts, "Optimizer restarts");
  spa->add_option("--delta-C", spa_args.delta_c, "Circuit failure tolerance for the T-count");
  spa->add_option("--spec-out", spa_args.spec_out, "Write the optimized ansatz spec here");
  spa->add_option("--out", spa_args.ham.out, "Also write the record to this file");

  BoostArgs boost_args;
  auto *boost = app.add_subcommand("boost", "Apply the Fourier Gaussian booster to the HF state");
  boost->add_option("hamiltonian", boost_args.ham.path, "Hamiltonian JSON file")->required();
  boost->add_option("--electrons", boost_args.ham.electrons, "Electron count")->required();
  boost->add_option("--a", boost_args.a, "Gaussian width (default ln(1000)/gap^2)");
  boost->add_option("--D", boost_args.depth, "Depth proxy");
  boost->add_option("--N", boost_args.n_points, "Discretization count");
  boost->add_option("--shift", boost_args.shift, "Spectral shift (default: exact E0)");
  boost->add_option("--backend", boost_args.backend, "exact or trotter");
  boost->add_option("--K", boost_args.k, "Trotter steps per evolution");
  boost->add_option("--out", boost_args.ham.out, "Also write the record to this file");

  ResourceArgs res_args;
  std::string res_out;
  auto *resources = app.add_subcommand("resources", "T-count cost model");
  resources->add_option("--rotations", res_args.rotations, "Pauli rotation count R");
  resources->add_option("--delta-C", res_args.delta_c, "Circuit failure tolerance");
  resources->add_option("--log-base", res_args.log_base, "natural or base2");
  resources->add_option("--t-k1", res_args.t_k1, "T-count of one Trotter step");
  resources->add_option("--K", res_args.k, "Trotter steps");
  resources->add_option("--D", res_args.depth, "Depth proxy");
  resources->add_option("--gap", res_args.gap, "Spectral gap for the maximal simulation time");
  resources->add_option("--toffoli", res_args.toffoli, "Toffoli count to convert to T gates");
  resources->add_option("--out", res_out, "Also write the record to this file");

  SpeedupArgs sp_args;
  std::string sp_out;
  auto *speedup = app.add_subcommand("speedup", "Speed-up ratio over Hartree-Fock");
  speedup->add_option("--gamma-sq", sp_args.gamma_sq, "Squared overlap of the prepared state")->required();
  speedup->add_option("--gamma0-sq", sp_args.gamma0_sq, "Squared HF overlap")->required();
  speedup->add_option("--sum", sp_args.sum, "alpha + beta");
  speedup->add_option("--alpha", sp_args.alpha, "alpha (booster formula)");
  speedup->add_option("--beta", sp_args.beta, "beta (booster formula)");
  speedup->add_flag("--booster", sp_args.booster, "Use the booster formula");
  speedup->add_option("--t-gsee", sp_args.t_gsee, "T-count of the estimation circuit");
  speedup->add_option("--t-b", sp_args.t_b, "T-count of the booster");
  speedup->add_option("--p-succ", sp_args.p_succ, "Booster success probability");
  speedup->add_option("--eps-tilde", sp_args.eps_tilde, "Target accuracy");
  speedup->add_option("--out", sp_out, "Also write the record to this file");

  std::string config_path, out_dir;
  auto *run_all = app.add_subcommand("run-all", "Run every stage from a configuration file");
  run_all->add_option("config", config_path, "Run configuration JSON")->required();
  run_all->add_option("--out", out_dir, "Output directory (overrides the configuration)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum) {
      emit(cmd_spectrum(spectrum_args), spectrum_args.out);
    } else if (*spa) {
      emit(cmd_spa(spa_args), spa_args.ham.out);
    } else if (*boost) {
      emit(cmd_boost(boost_args), boost_args.ham.out);
    } else if (*resources) {
      emit(cmd_resources(res_args), res_out);
    } else if (*speedup) {
      emit(cmd_speedup(sp_args), sp_out);
    } else if (*run_all) {
      auto cfg = gspcost::load_run_config(config_path);
      if (!out_dir.empty())
        cfg.output_dir = out_dir;
      const auto bundle = gspcost::run_all(cfg);
      for (const auto &[name, contents] : bundle)
        std::cout << (cfg.output_dir / name).string() << "\n";
    }
  } catch (const gspcost::InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gspcost::ComputationError &e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
