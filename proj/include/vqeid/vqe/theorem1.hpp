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

#include <span>
#include <vector>

#include "vqeid/common/types.hpp"
#include "vqeid/encoder/encoder.hpp"
#include "vqeid/sim/ground_truth.hpp"
#include "vqeid/sim/statevector.hpp"

namespace vqeid::vqe {

struct Superposition {
  std::vector<complex_t> alpha;  // unit vector over the candidates
  double fidelity = 0.0;         // max over alpha
  std::vector<double> per_state; // F_j summed over the ground subspace
  bool undefined = false;        // beta == 0, alpha arbitrary
};

/// Best fidelity reachable by sum_j alpha_j |psi_j> over orthonormal
/// candidates. For a single ground vector alpha = beta / |beta| and
/// F = sum_j |beta_j|^2; for a degenerate subspace F is the top eigenvalue
/// of sum_v beta_v beta_v^dag. Candidates must be orthonormal within 1e-10.
Superposition optimal_superposition(std::span<const sim::Statevector> states,
                                    const sim::GroundTruth& truth);

Superposition optimal_superposition(const encoder::BasisSet& basis,
                                    const sim::GroundTruth& truth);

}  // namespace vqeid::vqe
