/* Copyright 2026 The vqeid Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "vqeid/vqe/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "vqeid/common/error.hpp"
#include "vqeid/common/rng.hpp"
#include "vqeid/sim/execute.hpp"

namespace vqeid::vqe {

std::string_view to_string(Arm a) {
  return a == Arm::baseline ? "baseline" : "enhanced";
}

sim::Statevector reference_state(std::size_t n_qubits, basis_index reference) {
  return sim::init_basis_state(n_qubits, reference);
}

namespace {

std::vector<double> uniform_angles(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> d(0.0, 2.0 * std::numbers::pi);
  std::vector<double> out(n);
  for (auto& x : out) x = d(rng);
  return out;
}

void append_trace(RunRecord& rec, const std::vector<TraceEntry>& t) {
  rec.trace.insert(rec.trace.end(), t.begin(), t.end());
}

}  // namespace

RunRecord run_pipeline(const Problem& problem, const PipelineConfig& cfg,
                       std::uint64_t master_seed, std::uint64_t run_index) {
  VQEID_REQUIRE(problem.h && problem.truth && problem.ansatz,
                "pipeline problem is incomplete");
  const auto& h = *problem.h;
  const auto& ansatz = *problem.ansatz;
  const auto& truth = *problem.truth;
  const std::size_t n = ansatz.n_qubits();
  VQEID_REQUIRE(h.n_qubits() == n, "ansatz and Hamiltonian registers differ");
  cfg.optimizer.validate();

  RunRecord rec;
  rec.arm = cfg.arm;
  rec.master_seed = master_seed;
  rec.run_index = run_index;

  // Step 1: pretrain U(theta) from the reference state.
  Rng theta_rng = derive_stream(master_seed, run_index, "theta-init");
  const auto input = reference_state(n, problem.reference);
  auto pre = optimize(ansatz, input, h,
                      uniform_angles(ansatz.n_params(), theta_rng),
                      cfg.optimizer, cfg.optimizer.pretrain_max_iters,
                      cfg.optimizer.pretrain_grad_tol, "pretrain", false,
                      &truth);
  append_trace(rec, pre.trace);
  rec.pretrain_iterations = pre.iterations;

  if (cfg.arm == Arm::baseline) {
    rec.final_energy = pre.energy;
    rec.fidelity = pre.fidelity;
    rec.n_iterations = pre.iterations;
    rec.n_params = ansatz.n_params();
    rec.theta = pre.params;
    rec.resources = circuits::count_resources(ansatz, true);
  } else {
    cfg.selection.validate();
    // Steps 2-4: sample, score and select candidate basis states.
    Rng sampling_rng = derive_stream(master_seed, run_index, "sampling");
    std::optional<std::span<const basis_index>> sector;
    if (problem.sector) sector = std::span<const basis_index>(*problem.sector);
    auto sample = sample_basis(n, cfg.selection.M, problem.reference, sector,
                               sampling_rng);
    if (sample.clamped) {
      rec.warnings.push_back("sample count " + std::to_string(sample.requested) +
                             " exceeds the space size; clamped to " +
                             std::to_string(sample.states.size()));
    }
    Rng shot_rng = derive_stream(master_seed, run_index, "shots");
    const auto scores = score_basis(ansatz, pre.params, h, sample.states,
                                    cfg.shots, &shot_rng);
    Rng selection_rng = derive_stream(master_seed, run_index, "selection");
    SelectionConfig sel_cfg = cfg.selection;
    sel_cfg.M = sample.states.size();
    sel_cfg.m = std::min(sel_cfg.m, sel_cfg.M);
    const auto sel = select_states(n, sample.states, scores, problem.reference,
                                   pre.energy, sel_cfg, selection_rng);
    if (sel.fallback) {
      rec.warnings.push_back("selection pool of " +
                             std::to_string(sel.pool_size) +
                             " below T_e is too small; filled with the "
                             "lowest-scoring candidates");
    }
    rec.threshold_rule = std::string(to_string(cfg.selection.rule));
    rec.threshold = sel.threshold;
    rec.pool_size = sel.pool_size;
    rec.selection_fallback = sel.fallback;
    rec.basis = sel.basis;

    // Step 5: encoder V(gamma) over the selected states.
    const auto enc = encoder::synthesize(sel.basis);
    const auto joint_circuit = circuits::compose(enc.circuit, ansatz);

    // Step 6: joint optimization from (gamma random, theta pretrained).
    Rng gamma_rng = derive_stream(master_seed, run_index, "gamma-init");
    std::vector<double> start = uniform_angles(enc.n_params(), gamma_rng);
    start.insert(start.end(), pre.params.begin(), pre.params.end());
    rec.joint_start = rec.trace.size();
    auto joint = optimize(joint_circuit, sim::Statevector(n), h,
                          std::move(start), cfg.optimizer,
                          cfg.optimizer.joint_iters,
                          cfg.optimizer.pretrain_grad_tol, "joint", true,
                          &truth);
    append_trace(rec, joint.trace);
    rec.joint_iterations = joint.iterations;
    rec.final_energy = joint.energy;
    rec.fidelity = joint.fidelity;
    rec.n_iterations = pre.iterations + joint.iterations;
    rec.n_params = joint_circuit.n_params();
    rec.gamma.assign(joint.params.begin(),
                     joint.params.begin() +
                         static_cast<long>(enc.n_params()));
    rec.theta.assign(joint.params.begin() + static_cast<long>(enc.n_params()),
                     joint.params.end());
    rec.resources = circuits::count_resources(joint_circuit, true);
  }
  rec.min_energy = rec.final_energy;
  for (const auto& e : rec.trace) rec.min_energy = std::min(rec.min_energy, e.energy);
  return rec;
}

std::string RunRecord::to_jsonl() const {
  using nlohmann::json;
  std::ostringstream os;
  char hex[17];
  for (const auto& e : trace) {
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(e.param_hash));
    json j = {{"record", "iteration"},  {"phase", e.phase},
              {"iteration", e.iteration}, {"energy", e.energy},
              {"grad_norm", e.grad_norm}, {"fidelity", e.fidelity},
              {"param_hash", hex}};
    os << j.dump() << '\n';
  }
  json s = {{"record", "summary"},
            {"arm", to_string(arm)},
            {"master_seed", master_seed},
            {"run_index", run_index},
            {"final_energy", final_energy},
            {"fidelity", fidelity},
            {"min_energy", min_energy},
            {"pretrain_iterations", pretrain_iterations},
            {"joint_iterations", joint_iterations},
            {"N_I", n_iterations},
            {"N_para", n_params},
            {"C_R", cr()},
            {"one_qubit_gates", resources.one_qubit_gates},
            {"two_qubit_gates", resources.two_qubit_gates},
            {"multi_qubit_gates", resources.multi_qubit_gates},
            {"warnings", warnings}};
  s["joint_start"] = joint_start ? json(*joint_start) : json(nullptr);
  if (basis) {
    s["basis"] = basis->members;
    s["threshold_rule"] = threshold_rule;
    s["threshold"] = threshold;
    s["pool_size"] = pool_size;
    s["selection_fallback"] = selection_fallback;
  }
  os << s.dump() << '\n';
  return os.str();
}

}  // namespace vqeid::vqe
