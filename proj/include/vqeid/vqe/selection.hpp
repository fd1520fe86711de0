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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vqeid/circuits/circuit.hpp"
#include "vqeid/common/rng.hpp"
#include "vqeid/common/types.hpp"
#include "vqeid/encoder/encoder.hpp"
#include "vqeid/pauli/pauli_sum.hpp"

namespace vqeid::vqe {

enum class ThresholdRule { percentile, absolute, offset };

std::string_view to_string(ThresholdRule r);

struct SelectionConfig {
  std::size_t M = 2000;  // sampled candidates
  std::size_t m = 6;     // selected states, reference included
  ThresholdRule rule = ThresholdRule::offset;
  /// percentile: q in [0, 100]; absolute: T_e itself; offset: delta in
  /// T_e = E_pre + delta (E_max - E_pre).
  double rule_value = 0.2;
  /// Pick the m - 1 lowest-scoring pool members instead of a random draw.
  bool greedy = false;

  void validate() const;
};

struct SampleResult {
  std::vector<basis_index> states;  // ascending, reference included
  bool clamped = false;
  std::size_t requested = 0;
};

/// M distinct indices drawn uniformly without replacement from the sector
/// (or the full 2^n space) together with the reference. M larger than the
/// space is clamped and flagged.
SampleResult sample_basis(std::size_t n_qubits, std::size_t M,
                          basis_index reference,
                          std::optional<std::span<const basis_index>> sector,
                          Rng& rng);

/// <j| U^dag H U |j> per candidate; shot-sampled when `shots` is set.
std::vector<double> score_basis(const circuits::Circuit& u,
                                std::span<const double> theta,
                                const pauli::PauliSum& h,
                                std::span<const basis_index> states,
                                std::optional<std::size_t> shots = {},
                                Rng* shot_rng = nullptr);

struct SelectionResult {
  encoder::BasisSet basis;
  double threshold = 0.0;
  std::size_t pool_size = 0;
  bool fallback = false;
};

/// Threshold T_e from the rule, pool = non-reference candidates with
/// score < T_e, then m - 1 random pool members plus the reference. A pool
/// smaller than m - 1 is topped up with the lowest-scoring remaining
/// candidates and flagged as a fallback.
SelectionResult select_states(std::size_t n_qubits,
                              std::span<const basis_index> states,
                              std::span<const double> scores,
                              basis_index reference, double pretrained_energy,
                              const SelectionConfig& cfg, Rng& rng);

}  // namespace vqeid::vqe
