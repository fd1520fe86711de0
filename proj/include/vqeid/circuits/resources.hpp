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

#include "vqeid/circuits/circuit.hpp"

namespace vqeid::circuits {

struct Resources {
  std::size_t layers_hint = 0;
  std::size_t one_qubit_gates = 0;
  std::size_t two_qubit_gates = 0;
  /// Gates acting on three or more qubits; zero once composites are expanded.
  std::size_t multi_qubit_gates = 0;
  std::size_t n_params = 0;

  std::size_t total_gates() const {
    return one_qubit_gates + two_qubit_gates + multi_qubit_gates;
  }
  friend bool operator==(const Resources&, const Resources&) = default;
};

/// Two-qubit cost of a rotation with k controls under the recursive
/// C^k(U) = C(V) C^{k-1}(X) C(V^dag) C^{k-1}(X) C^{k-1}(V) construction:
/// 1, 5, 17, 53, ...
std::size_t controlled_rotation_cost(std::size_t controls);

/// Tallies gates. With `expand` set, composites are counted after `expand`,
/// so UXX costs 2 two-qubit gates, UXY 4, UZXZ 4 and CCRY/CCRZ 5; MCRY/MCRZ
/// use controlled_rotation_cost. UZZ stays one native two-qubit gate.
Resources count_resources(const Circuit& c, bool expand);

}  // namespace vqeid::circuits
