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
#include <span>
#include <string>
#include <vector>

#include "vqeid/circuits/circuit.hpp"
#include "vqeid/common/rng.hpp"
#include "vqeid/common/types.hpp"
#include "vqeid/sim/statevector.hpp"

namespace vqeid::encoder {

/// Ordered set of distinct computational-basis states, one of which is the
/// reference.
struct BasisSet {
  std::size_t n_qubits = 0;
  std::vector<basis_index> members;
  basis_index reference = 0;

  /// Throws InputError on duplicates, out-of-range members, or a reference
  /// that is not a member.
  void validate() const;
  std::size_t size() const { return members.size(); }
  bool contains(basis_index i) const;
  /// Space-separated integers.
  std::string to_text() const;
};

/// One pair merge of the reduction that maps the member set onto a single
/// string. Strings are in the coordinates reached after all earlier steps.
struct MergeStep {
  basis_index keep = 0;   // pivot bit 0; survives the merge
  basis_index drop = 0;   // pivot bit 1 after the CNOTs; removed
  std::size_t pivot = 0;
  std::vector<std::size_t> cnot_targets;  // CNOT(pivot -> t), in order
  std::vector<std::size_t> controls;      // ascending
  basis_index control_values = 0;         // keep's bits on the controls
};

struct Encoder {
  circuits::Circuit circuit;
  BasisSet basis;
  std::vector<MergeStep> plan;
  basis_index root = 0;

  std::size_t n_params() const { return circuit.n_params(); }
};

/// Builds V(gamma) with V|0...0> in span(basis.members) for every gamma and
/// exactly 2(m-1) parameters. The forward circuit flips |0...0> to the root
/// string, then undoes the merges last to first: an (anti-)controlled RY and
/// RZ pair splits the amplitude of `keep` onto `drop`, and the step's CNOTs
/// restore the earlier coordinates.
Encoder synthesize(const BasisSet& basis);

/// Parameters realizing `target` (amplitudes in basis.members order) up to a
/// global phase. Non-normalized targets are rescaled; a zero target throws.
std::vector<double> solve_parameters(const Encoder& enc,
                                     std::span<const complex_t> target);

/// Total probability outside the member set.
double leakage(const sim::Statevector& state, const BasisSet& basis);

struct SupportReport {
  bool pass = false;
  double worst_leakage = 0.0;
};

/// Runs the encoder at `trials` uniform draws of gamma in [0, 2 pi).
SupportReport verify_support(const Encoder& enc, std::size_t trials, Rng& rng,
                             double threshold = 1e-10);

}  // namespace vqeid::encoder
