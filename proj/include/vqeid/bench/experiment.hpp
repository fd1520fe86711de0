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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vqeid/bench/config.hpp"
#include "vqeid/circuits/circuit.hpp"
#include "vqeid/pauli/pauli_sum.hpp"
#include "vqeid/sim/ground_truth.hpp"
#include "vqeid/vqe/pipeline.hpp"

namespace vqeid::bench {

/// Hamiltonian, exact ground truth and input state shared by every run of
/// one experiment.
struct Setup {
  pauli::PauliSum h;
  sim::GroundTruth truth;
  basis_index reference = 0;
  std::optional<std::vector<basis_index>> sector;
};

/// Builds H and diagonalises it; Hubbard models use the particle-number
/// sector of the reference.
Setup prepare(const models::ModelSpec& model);

/// Ansatz of the configured kind with `layers` layers for the model.
circuits::Circuit build_ansatz(const ExperimentConfig& cfg,
                               std::size_t layers);

/// Ansatz layers run by `arm` at depth budget `depth`. Under `replace` the
/// enhanced arm gives one layer of the budget to the encoder.
std::size_t ansatz_layers(const ExperimentConfig& cfg, vqe::Arm arm,
                          std::size_t depth);

struct Job {
  std::size_t seed = 0;  // run index
  vqe::Arm arm = vqe::Arm::baseline;
  std::size_t depth = 0;
  std::size_t layers = 0;  // ansatz layers actually run
  std::size_t m = 1;       // selected states; 1 for the baseline arm
  bool tag_m = false;      // include m in the trace file name
};

struct JobResult {
  Job job;
  vqe::RunRecord record;
  std::string error;  // set when the run was aborted
};

/// Jobs for `depths` x arms x seeds, in that nesting order.
std::vector<Job> plan_depths(const ExperimentConfig& cfg,
                             const std::vector<std::size_t>& depths);

/// Enhanced-arm jobs for each m on the ansatz.depth base.
std::vector<Job> plan_m(const ExperimentConfig& cfg,
                        const std::vector<std::size_t>& m_list);

/// Called on the collector thread after each finished job.
using Progress = std::function<void(const JobResult&, std::size_t done,
                                    std::size_t total)>;

/// Runs every job on run.workers threads. Trace files are written by the
/// calling thread as results arrive; results come back in job order.
std::vector<JobResult> execute(const ExperimentConfig& cfg, const Setup& setup,
                               const std::vector<Job>& jobs,
                               const std::string& out_dir,
                               const Progress& progress = {});

std::string trace_file_name(const Job& job);

/// summary.csv: one row per run, fixed columns (see schema_text).
std::string summary_csv(const std::vector<JobResult>& results,
                        const Setup& setup);

/// Resource table: per (arm, depth) the layer count, two-qubit gates, mean
/// N_I, N_para and C_R = mean N_I x N_para.
std::string resource_table(const std::vector<JobResult>& results);

/// sweep_m.csv: per m the median and mean infidelity over seeds.
std::string sweep_m_csv(const std::vector<JobResult>& results);

/// Column documentation for every artifact.
std::string schema_text();

double median(std::vector<double> v);

/// Optimal-superposition property suite over random (ground state, basis subset) pairs.
struct Theorem1Report {
  std::size_t trials = 0;
  double worst_equality = 0.0;      // |F* - sum F_j|
  double worst_attained = 0.0;      // |F* - F(state built from alpha)|
  double worst_bound = 0.0;         // max(0, F(random alpha) - F*)
  double worst_collinearity = 0.0;  // 1 - |<alpha, beta>| / |beta|
  std::size_t monotonicity_violations = 0;
  bool pass = false;
  std::string to_text() const;
};

Theorem1Report theorem1_suite(std::size_t n_min, std::size_t n_max,
                              std::size_t trials, std::uint64_t seed,
                              double tolerance = 1e-9);

}  // namespace vqeid::bench
