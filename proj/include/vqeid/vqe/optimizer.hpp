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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqeid/circuits/circuit.hpp"
#include "vqeid/pauli/pauli_sum.hpp"
#include "vqeid/sim/ground_truth.hpp"
#include "vqeid/sim/statevector.hpp"
#include "vqeid/vqe/objective.hpp"

namespace vqeid::vqe {

enum class OptimizerMethod { adam, gradient_descent };

std::string_view to_string(OptimizerMethod m);
std::string_view to_string(GradientMode m);

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::adam;
  double learning_rate = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double pretrain_grad_tol = 1e-3;
  std::size_t pretrain_max_iters = 3000;
  std::size_t joint_iters = 200;
  GradientMode gradient_mode = GradientMode::adjoint;
  double fd_step = 1e-6;

  void validate() const;
};

/// Adam or plain gradient descent. State resets with each new instance.
class Optimizer {
 public:
  explicit Optimizer(const OptimizerConfig& cfg, std::size_t n_params);
  void step(std::span<double> params, std::span<const double> grad);

 private:
  OptimizerConfig cfg_;
  std::vector<double> m_;
  std::vector<double> v_;
  std::size_t t_ = 0;
};

struct TraceEntry {
  std::string phase;
  std::size_t iteration = 0;
  double energy = 0.0;
  double grad_norm = 0.0;
  double fidelity = 0.0;
  std::uint64_t param_hash = 0;
};

/// FNV-1a over the raw bytes of the parameter vector.
std::uint64_t hash_params(std::span<const double> params);

struct PhaseResult {
  std::vector<double> params;
  double energy = 0.0;
  double fidelity = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<TraceEntry> trace;
};

/// Gradient loop shared by both phases. Each iteration evaluates energy and
/// gradient at the current iterate and records it; the loop stops when the
/// gradient norm drops below `grad_tol` or after `max_iters` evaluations.
/// No update follows the last evaluation. `keep_best` returns the lowest
/// energy iterate seen instead of the last one. With max_iters == 0 the
/// start point is evaluated but not counted. `truth` (optional) fills the
/// per-iteration fidelity.
PhaseResult optimize(const circuits::Circuit& u, const sim::Statevector& input,
                     const pauli::PauliSum& h, std::vector<double> start,
                     const OptimizerConfig& cfg, std::size_t max_iters,
                     double grad_tol, std::string_view phase, bool keep_best,
                     const sim::GroundTruth* truth = nullptr);

}  // namespace vqeid::vqe
