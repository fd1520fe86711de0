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
#include "vqeid/circuits/resources.hpp"

#include "vqeid/circuits/decompose.hpp"
#include "vqeid/common/error.hpp"

namespace vqeid::circuits {

std::size_t controlled_rotation_cost(std::size_t controls) {
  VQEID_REQUIRE(controls >= 1, "controlled rotation needs a control");
  std::size_t cost = 1;
  for (std::size_t k = 2; k <= controls; ++k) cost = 2 + 3 * cost;
  return cost;
}

namespace {
void tally(Resources& r, const Gate& g, bool expanded) {
  const std::size_t width = g.qubits.size();
  if (width == 1) {
    ++r.one_qubit_gates;
  } else if (width == 2) {
    ++r.two_qubit_gates;
  } else if (expanded) {
    // Only MCRY/MCRZ survive expansion with three or more qubits.
    r.two_qubit_gates += controlled_rotation_cost(width - 1);
  } else {
    ++r.multi_qubit_gates;
  }
}
}  // namespace

Resources count_resources(const Circuit& c, bool expand_flag) {
  Resources r;
  r.layers_hint = c.layers();
  r.n_params = c.n_params();
  for (const auto& g : c.gates()) {
    if (expand_flag) {
      for (const auto& e : expand(g)) tally(r, e, true);
    } else {
      tally(r, g, false);
    }
  }
  return r;
}

}  // namespace vqeid::circuits
