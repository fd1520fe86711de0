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
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vqeid/circuits/circuit.hpp"
#include "vqeid/circuits/resources.hpp"
#include "vqeid/common/types.hpp"
#include "vqeid/encoder/encoder.hpp"
#include "vqeid/pauli/pauli_sum.hpp"
#include "vqeid/sim/ground_truth.hpp"
#include "vqeid/vqe/optimizer.hpp"
#include "vqeid/vqe/selection.hpp"

namespace vqeid::vqe {

enum class Arm { baseline, enhanced };

std::string_view to_string(Arm a);

struct PipelineConfig {
  Arm arm = Arm::enhanced;
  OptimizerConfig optimizer;
  SelectionConfig selection;
  /// Shot count for candidate scoring; exact when unset.
  std::optional<std::size_t> shots;
};

/// Everything a run reads but never mutates.
struct Problem {
  const pauli::PauliSum* h = nullptr;
  const sim::GroundTruth* truth = nullptr;
  const circuits::Circuit* ansatz = nullptr;
  basis_index reference = 0;
  std::optional<std::vector<basis_index>> sector;
};

struct RunRecord {
  Arm arm = Arm::baseline;
  std::uint64_t master_seed = 0;
  std::uint64_t run_index = 0;

  std::vector<TraceEntry> trace;
  /// Index of the first joint-phase trace entry.
  std::optional<std::size_t> joint_start;

  double final_energy = 0.0;
  double fidelity = 0.0;
  double min_energy = 0.0;  // lowest energy recorded anywhere in the run
  std::size_t pretrain_iterations = 0;
  std::size_t joint_iterations = 0;
  std::size_t n_iterations = 0;  // N_I
  std::size_t n_params = 0;      // N_para
  std::uint64_t cr() const {
    return static_cast<std::uint64_t>(n_iterations) * n_params;
  }

  std::vector<double> theta;
  std::vector<double> gamma;
  circuits::Resources resources;

  std::optional<encoder::BasisSet> basis;
  std::string threshold_rule;
  double threshold = 0.0;
  std::size_t pool_size = 0;
  bool selection_fallback = false;
  std::vector<std::string> warnings;

  /// One JSON object per line: iterations, then a summary record.
  std::string to_jsonl() const;
};

/// Algorithm steps 1-6 (enhanced) or pretraining only (baseline). Random
/// streams "theta-init", "sampling", "selection", "gamma-init" and "shots"
/// are derived from (master_seed, run_index).
RunRecord run_pipeline(const Problem& problem, const PipelineConfig& cfg,
                       std::uint64_t master_seed, std::uint64_t run_index);

/// Input state for an ansatz run from `reference`.
sim::Statevector reference_state(std::size_t n_qubits, basis_index reference);

}  // namespace vqeid::vqe
